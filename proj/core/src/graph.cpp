#include "symctrl/graph.hpp"

#include "symctrl/errors.hpp"

#include <algorithm>
#include <queue>

namespace symctrl {

GraphSpec::GraphSpec(std::size_t n, std::vector<Edge> edges, std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)), adjacency_(n) {
    if (!names_.empty() && names_.size() != n_)
        throw InvalidParameter("vertex label count does not match vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw SelfLoop(e.u);
        if (e.v >= n_)
            throw IndexOutOfRange("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  "} exceeds vertex count " + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw DuplicateEdge("duplicate edge {" + std::to_string(dup->u) + ", " +
                            std::to_string(dup->v) + "}");

    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    connected_ = n_ == 0 || component_of(0).size() == n_;
}

bool GraphSpec::has_edge(Vertex a, Vertex b) const {
    return edge_index(a, b).has_value();
}

std::optional<std::size_t> GraphSpec::edge_index(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Vertex> GraphSpec::component_of(Vertex start) const {
    if (start >= n_) throw IndexOutOfRange("vertex " + std::to_string(start) + " out of range");
    std::vector<bool> seen(n_, false);
    std::queue<Vertex> frontier;
    seen[start] = true;
    frontier.push(start);
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                frontier.push(w);
            }
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

const Rational* WeightAssignment::find(Edge e) const {
    auto it = values_.find(e);
    return it == values_.end() ? nullptr : &it->second;
}

bool WeightAssignment::matches(const GraphSpec& graph) const {
    if (values_.size() != graph.edge_count()) return false;
    auto it = values_.begin();
    for (const Edge& e : graph.edges()) {
        if (it->first != e) return false;
        ++it;
    }
    return true;
}

WeightAssignment unit_weights(const GraphSpec& graph) {
    std::map<Edge, Rational> values;
    for (const Edge& e : graph.edges()) values.emplace(e, Rational(1));
    return WeightAssignment(std::move(values));
}

WeightAssignment weights_in_edge_order(const GraphSpec& graph, const std::vector<Rational>& values) {
    if (values.size() != graph.edge_count())
        throw InvalidParameter("weight vector length does not match edge count");
    std::map<Edge, Rational> out;
    for (std::size_t k = 0; k < values.size(); ++k) out.emplace(graph.edges()[k], values[k]);
    return WeightAssignment(std::move(out));
}

void ControlProblem::validate() const {
    if (control_node >= graph.vertex_count())
        throw IndexOutOfRange("control node " + std::to_string(control_node) +
                              " out of range for " + std::to_string(graph.vertex_count()) +
                              " vertices");
    if (weights && !weights->matches(graph))
        throw InvalidParameter("weight assignment keys differ from the edge set");
}

std::string check_invariants(const GraphSpec& graph) {
    const auto& edges = graph.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        if (e.u == e.v) return "self loop at " + std::to_string(e.u);
        if (e.u > e.v) return "edge endpoints not ordered";
        if (e.v >= graph.vertex_count()) return "endpoint out of range";
        if (k > 0 && !(edges[k - 1] < e)) return "edges not strictly sorted (duplicate or unordered)";
    }
    return {};
}

}  // namespace symctrl
