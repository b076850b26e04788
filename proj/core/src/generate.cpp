#include "symctrl/generate.hpp"

#include "symctrl/errors.hpp"
#include "symctrl/random.hpp"

#include <set>
#include <sstream>

namespace symctrl {

std::string GraphModel::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Path: out << "path"; break;
        case Kind::Cycle: out << "cycle"; break;
        case Kind::ErdosRenyi: out << "erdos-renyi(p=" << p << ")"; break;
        case Kind::WattsStrogatz: out << "watts-strogatz(k=" << k << ", beta=" << beta << ")"; break;
    }
    return out.str();
}

namespace {

std::vector<Edge> watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
    std::vector<std::set<Vertex>> adj(n);
    for (Vertex u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= k / 2; ++j) {
            Vertex v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    Rng rng(seed);
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (Vertex u = 0; u < n; ++u) {
            Vertex v = (u + j) % n;
            if (rng.unit() >= beta) continue;
            if (!adj[u].count(v)) continue;           // already rewired away
            if (adj[u].size() >= n - 1) continue;     // nowhere to go
            Vertex w;
            do {
                w = static_cast<Vertex>(rng.between(0, n - 1));
            } while (w == u || adj[u].count(w));
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

}  // namespace

GraphSpec generate(const GraphModel& model, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InvalidParameter("vertex count must be positive");
    std::vector<Edge> edges;

    switch (model.kind) {
        case GraphModel::Kind::Path:
            for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            break;
        case GraphModel::Kind::Cycle:
            if (n < 3) throw InvalidParameter("a cycle needs at least 3 vertices");
            for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
            break;
        case GraphModel::Kind::ErdosRenyi: {
            if (!(model.p >= 0.0 && model.p <= 1.0))
                throw InvalidParameter("edge probability must lie in [0, 1]");
            Rng rng(seed);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.unit() < model.p) edges.emplace_back(u, v);
            break;
        }
        case GraphModel::Kind::WattsStrogatz:
            if (model.k % 2 != 0) throw InvalidParameter("ring degree k must be even");
            if (model.k >= n) throw InvalidParameter("ring degree k must be smaller than n");
            if (!(model.beta >= 0.0 && model.beta <= 1.0))
                throw InvalidParameter("rewiring probability must lie in [0, 1]");
            edges = watts_strogatz(n, model.k, model.beta, seed);
            break;
    }
    return GraphSpec(n, std::move(edges));
}

}  // namespace symctrl
