#include "symctrl/hamiltonian.hpp"

#include "symctrl/errors.hpp"
#include "symctrl/random.hpp"

#include <algorithm>
#include <numeric>

namespace symctrl {

std::string check_path(const GraphSpec& graph, const HamPath& path, std::optional<Vertex> start) {
    const auto& p = path.vertices;
    if (p.size() != graph.vertex_count())
        return "path has " + std::to_string(p.size()) + " vertices, graph has " +
               std::to_string(graph.vertex_count());
    if (p.empty()) return {};
    if (start && p.front() != *start)
        return "path starts at " + std::to_string(p.front()) + " instead of " + std::to_string(*start);
    std::vector<bool> seen(graph.vertex_count(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= graph.vertex_count()) return "vertex " + std::to_string(p[i]) + " out of range";
        if (seen[p[i]]) return "vertex " + std::to_string(p[i]) + " repeated";
        seen[p[i]] = true;
        if (i > 0 && !graph.has_edge(p[i - 1], p[i]))
            return "no edge between " + std::to_string(p[i - 1]) + " and " + std::to_string(p[i]);
    }
    return {};
}

std::string_view to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "unknown";
}

namespace {

class PathSearch {
public:
    PathSearch(const GraphSpec& g, std::uint64_t budget, std::vector<std::uint64_t> keys)
        : g_(g), n_(g.vertex_count()), budget_(budget), visited_(n_, false), degree_(n_), mark_(n_, 0),
          key_(std::move(keys)), disc_(n_), low_(n_), membership_(n_) {
        for (Vertex v = 0; v < n_; ++v) degree_[v] = g.neighbors(v).size();
        queue_.reserve(n_);
    }

    HamSearchResult run(Vertex start) {
        HamSearchResult result;
        visit(start);
        if (path_.size() == n_) return found();
        if (!feasible(start)) {
            result.expansions = expansions_;
            return result;
        }
        frames_.push_back({start, candidates(start), 0});

        while (!frames_.empty()) {
            Frame& f = frames_.back();
            if (f.next == f.candidates.size()) {
                frames_.pop_back();
                if (frames_.empty()) break;  // start frame exhausted
                unvisit();
                continue;
            }
            const Vertex u = f.candidates[f.next++];
            if (expansions_ >= budget_) {
                result.status = SearchStatus::BudgetExhausted;
                result.expansions = expansions_;
                return result;
            }
            visit(u);
            if (path_.size() == n_) return found();
            if (!feasible(u)) {
                unvisit();
                continue;
            }
            frames_.push_back({u, candidates(u), 0});
        }
        result.status = SearchStatus::Exhausted;
        result.expansions = expansions_;
        return result;
    }

private:
    struct Frame {
        Vertex vertex;
        std::vector<Vertex> candidates;
        std::size_t next;
    };

    HamSearchResult found() const {
        return {HamPath{path_}, SearchStatus::Found, expansions_};
    }

    void visit(Vertex v) {
        visited_[v] = true;
        path_.push_back(v);
        for (Vertex w : g_.neighbors(v)) --degree_[w];
        ++expansions_;
    }

    void unvisit() {
        const Vertex v = path_.back();
        path_.pop_back();
        visited_[v] = false;
        for (Vertex w : g_.neighbors(v)) ++degree_[w];
    }

    // Unvisited neighbours of v, fewest onward moves first, ties by key.
    std::vector<Vertex> candidates(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex w : g_.neighbors(v))
            if (!visited_[w]) out.push_back(w);
        std::stable_sort(out.begin(), out.end(),
                         [&](Vertex a, Vertex b) {
                             return degree_[a] != degree_[b] ? degree_[a] < degree_[b] : key_[a] < key_[b];
                         });
        return out;
    }

    // Necessary conditions for completing the path from endpoint `tip`.
    bool feasible(Vertex tip) {
        const std::size_t remaining = n_ - path_.size();
        std::size_t forced_ends = 0;
        for (Vertex u = 0; u < n_; ++u) {
            if (visited_[u]) continue;
            const std::size_t reach = degree_[u] + (g_.has_edge(u, tip) ? 1 : 0);
            if (reach == 0) return false;
            if (reach == 1 && remaining > 1) {
                // Only neighbour is the tip: it would have to be next and last.
                if (degree_[u] == 0) return false;
                if (++forced_ends > 1) return false;
            }
        }

        ++stamp_;
        queue_.clear();
        queue_.push_back(tip);
        mark_[tip] = stamp_;
        std::size_t reached = 0;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            for (Vertex w : g_.neighbors(queue_[head])) {
                if (visited_[w] || mark_[w] == stamp_) continue;
                mark_[w] = stamp_;
                queue_.push_back(w);
                ++reached;
            }
        }
        return reached == remaining && block_chain(tip);
    }

    // A Hamiltonian path from `tip` through the unvisited vertices needs the
    // block-cut tree of that subgraph to be a chain, with `tip` in an end
    // block and not itself a cut vertex. Tarjan's lowpoint DFS, iterative.
    bool block_chain(Vertex tip) {
        ++stamp_;
        blocks_.clear();
        block_start_.clear();
        vstack_.clear();
        dfs_.clear();
        std::uint32_t clock = 0;
        auto discover = [&](Vertex v) {
            mark_[v] = stamp_;
            disc_[v] = low_[v] = ++clock;
            membership_[v] = 0;
            vstack_.push_back(v);
            dfs_.push_back({v, 0});
        };
        discover(tip);
        while (!dfs_.empty()) {
            auto& [v, i] = dfs_.back();
            const auto& nb = g_.neighbors(v);
            if (i < nb.size()) {
                const Vertex w = nb[i++];
                if (visited_[w] && w != tip) continue;
                if (mark_[w] != stamp_) discover(w);
                else low_[v] = std::min(low_[v], disc_[w]);
                continue;
            }
            const Vertex child = v;
            dfs_.pop_back();
            if (dfs_.empty()) break;
            const Vertex parent = dfs_.back().first;
            low_[parent] = std::min(low_[parent], low_[child]);
            if (low_[child] < disc_[parent]) continue;
            // parent separates child's subtree: pop one block
            block_start_.push_back(blocks_.size());
            Vertex x;
            do {
                x = vstack_.back();
                vstack_.pop_back();
                blocks_.push_back(x);
                ++membership_[x];
            } while (x != child);
            blocks_.push_back(parent);
            ++membership_[parent];
        }

        const std::size_t count = block_start_.size();
        if (count <= 1) return true;
        if (membership_[tip] != 1) return false;
        block_start_.push_back(blocks_.size());
        for (std::size_t b = 0; b < count; ++b) {
            std::size_t cuts = 0;
            bool has_tip = false;
            for (std::size_t k = block_start_[b]; k < block_start_[b + 1]; ++k) {
                const Vertex x = blocks_[k];
                if (membership_[x] > 2) return false;
                cuts += membership_[x] == 2;
                has_tip |= x == tip;
            }
            if (cuts > 2 || (has_tip && cuts != 1)) return false;
        }
        return true;
    }

    const GraphSpec& g_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    std::vector<bool> visited_;
    std::vector<std::size_t> degree_;  // unvisited neighbours
    std::vector<Vertex> path_;
    std::vector<Frame> frames_;
    std::vector<std::uint64_t> mark_;
    std::uint64_t stamp_ = 0;
    std::vector<Vertex> queue_;
    std::vector<std::uint64_t> key_;
    std::vector<std::uint32_t> disc_;
    std::vector<std::uint32_t> low_;
    std::vector<std::uint32_t> membership_;  // blocks containing each vertex
    std::vector<Vertex> blocks_;
    std::vector<std::size_t> block_start_;
    std::vector<Vertex> vstack_;
    std::vector<std::pair<Vertex, std::size_t>> dfs_;
};

// 1, 1, 2, 1, 1, 2, 4, 1, 1, 2, ... (i >= 1)
std::uint64_t luby(std::uint64_t i) {
    for (;;) {
        std::uint64_t k = 1;
        while ((std::uint64_t{1} << k) - 1 < i) ++k;
        if ((std::uint64_t{1} << k) - 1 == i) return std::uint64_t{1} << (k - 1);
        i -= (std::uint64_t{1} << (k - 1)) - 1;
    }
}

}  // namespace

HamSearchResult find_hamiltonian_path(const GraphSpec& graph, Vertex start, std::uint64_t budget) {
    if (start >= graph.vertex_count()) throw IndexOutOfRange("start vertex out of range");
    if (budget == 0) throw InvalidParameter("search budget must be positive");
    const std::size_t n = graph.vertex_count();
    const std::uint64_t unit = 4 * std::max<std::uint64_t>(n, 16);
    std::vector<std::uint64_t> keys(n);
    std::iota(keys.begin(), keys.end(), 0);

    std::uint64_t spent = 0;
    for (std::uint64_t run = 1;; ++run) {
        if (run > 1) {
            Rng rng(run);
            for (auto& k : keys) k = rng.next();
        }
        const std::uint64_t left = budget - spent;
        const std::uint64_t slice = luby(run) > left / unit ? left : luby(run) * unit;
        HamSearchResult r = PathSearch(graph, slice, keys).run(start);
        spent += r.expansions;
        r.expansions = spent;
        if (r.status != SearchStatus::BudgetExhausted || spent >= budget) return r;
    }
}

}  // namespace symctrl
