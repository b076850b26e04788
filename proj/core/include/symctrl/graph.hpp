#pragma once

#include <symctrl/rational.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symctrl {

using Vertex = std::size_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1. Edges are kept sorted
/// lexicographically; that order is the canonical variable order used by
/// the symbolic and randomized certifiers.
class GraphSpec {
public:
    GraphSpec() = default;

    /// Throws SelfLoop, DuplicateEdge or IndexOutOfRange.
    GraphSpec(std::size_t n, std::vector<Edge> edges, std::vector<std::string> names = {});

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Number of nonzero off-diagonal adjacency entries (each edge counted twice).
    std::size_t directed_pair_count() const noexcept { return 2 * edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

    bool has_edge(Vertex a, Vertex b) const;
    /// Position of {a, b} in edges(), or nullopt.
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    bool connected() const noexcept { return connected_; }
    /// Vertices reachable from `start` (including it), ascending.
    std::vector<Vertex> component_of(Vertex start) const;

    bool operator==(const GraphSpec& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vertex>> adjacency_;
    bool connected_ = true;
};

/// Exact weight per undirected edge; a_ij = a_ji holds by construction.
class WeightAssignment {
public:
    WeightAssignment() = default;
    explicit WeightAssignment(std::map<Edge, Rational> values) : values_(std::move(values)) {}

    const std::map<Edge, Rational>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const Rational* find(Edge e) const;
    void set(Edge e, Rational w) { values_[e] = std::move(w); }

    /// True iff the key set equals the graph's edge set.
    bool matches(const GraphSpec& graph) const;

    bool operator==(const WeightAssignment&) const = default;

private:
    std::map<Edge, Rational> values_;
};

/// Every edge of `graph` weighted 1.
WeightAssignment unit_weights(const GraphSpec& graph);

/// Weights taken in canonical edge order.
WeightAssignment weights_in_edge_order(const GraphSpec& graph, const std::vector<Rational>& values);

struct ControlProblem {
    GraphSpec graph;
    std::optional<WeightAssignment> weights;
    Vertex control_node = 0;

    /// Throws IndexOutOfRange or InvalidParameter when the invariants fail.
    void validate() const;
};

/// Re-checks every GraphSpec invariant from scratch; returns an empty
/// string when all hold, otherwise a description of the first violation.
std::string check_invariants(const GraphSpec& graph);

}  // namespace symctrl
