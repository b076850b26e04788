#pragma once

#include <symctrl/graph.hpp>
#include <symctrl/polynomial.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace symctrl {

inline constexpr std::size_t kDefaultSymbolicLimit = 7;

/// One variable per undirected edge in canonical edge order, named
/// "a<u><v>" ("a<u>_<v>" once an index needs two digits). `index_base`
/// shifts the printed indices, so base 1 yields a12, a13, a23 for a triangle.
std::vector<std::string> edge_variable_names(const GraphSpec& graph, unsigned index_base = 0);

/// Square matrix of polynomials, row-major.
struct PolyMatrix {
    std::size_t n = 0;
    std::vector<MultiPoly> entries;

    const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
    MultiPoly& operator()(std::size_t r, std::size_t c) { return entries[r * n + c]; }
};

/// C(A, b) over Z[a_e : e in E] with the symmetric adjacency A(u,v) = A(v,u) = a_{uv}.
PolyMatrix symbolic_controllability_matrix(const GraphSpec& graph, Vertex control_node);

/// det C(A, b) as a polynomial in the edge weights, expanded by Laplace
/// along columns with memoisation over row subsets. Weights in the
/// problem, if any, are ignored. Throws TooLarge when n exceeds `limit`.
MultiPoly symbolic_det(const ControlProblem& problem, std::size_t limit = kDefaultSymbolicLimit);

/// Evaluates phi at the weights of `point`. Throws MissingVariable when an
/// edge of `graph` has no weight.
Rational poly_eval(const MultiPoly& phi, const GraphSpec& graph, const WeightAssignment& point);

/// `steps` equally spaced values from lo to hi inclusive (just lo when steps == 1).
struct GridAxis {
    Rational lo;
    Rational hi;
    std::size_t steps = 1;

    std::vector<Rational> values() const;
};

struct VarietyPoint {
    std::vector<Rational> weights;
    Rational value;
    bool on_variety = false;
};

struct VarietySample {
    std::vector<std::string> variables;
    std::vector<GridAxis> grid;
    std::vector<VarietyPoint> points;
};

inline constexpr std::size_t kDefaultGridCap = 1'000'000;

/// Evaluates phi exactly on the Cartesian grid; a point is on the variety
/// iff the value is exactly zero. Throws InvalidParameter when the axis
/// count differs from the variable count and GridTooLarge above `cap` points.
VarietySample variety_sample(const MultiPoly& phi, const std::vector<GridAxis>& grid,
                             std::vector<std::string> variables,
                             std::size_t cap = kDefaultGridCap);

/// One row per grid point: variable columns, "phi", "on_variety" (0/1).
std::string to_csv(const VarietySample& sample);

}  // namespace symctrl
