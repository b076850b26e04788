#include "symctrl/symbolic.hpp"

#include "symctrl/errors.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

namespace symctrl {

std::vector<std::string> edge_variable_names(const GraphSpec& graph, unsigned index_base) {
    const bool wide = graph.vertex_count() + index_base > 10;
    std::vector<std::string> names;
    names.reserve(graph.edge_count());
    for (const Edge& e : graph.edges()) {
        std::string name = "a" + std::to_string(e.u + index_base);
        if (wide) name += '_';
        name += std::to_string(e.v + index_base);
        names.push_back(std::move(name));
    }
    return names;
}

PolyMatrix symbolic_controllability_matrix(const GraphSpec& graph, Vertex control_node) {
    const std::size_t n = graph.vertex_count();
    const std::size_t vars = graph.edge_count();
    if (control_node >= n) throw IndexOutOfRange("control node out of range");

    PolyMatrix c{n, std::vector<MultiPoly>(n * n, MultiPoly(vars))};
    std::vector<MultiPoly> v(n, MultiPoly(vars));
    v[control_node] = MultiPoly::constant(vars, 1);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) c(i, k) = v[i];
        if (k + 1 == n) break;
        std::vector<MultiPoly> next(n, MultiPoly(vars));
        for (std::size_t i = 0; i < n; ++i) {
            for (Vertex j : graph.neighbors(i)) {
                if (v[j].is_zero()) continue;
                auto var = MultiPoly::variable(vars, *graph.edge_index(i, j));
                next[i] += var * v[j];
            }
        }
        v = std::move(next);
    }
    return c;
}

MultiPoly symbolic_det(const ControlProblem& problem, std::size_t limit) {
    problem.validate();
    const std::size_t n = problem.graph.vertex_count();
    if (n > limit)
        throw TooLarge("symbolic expansion limited to n <= " + std::to_string(limit) + ", got " +
                       std::to_string(n));
    if (n > 31) throw TooLarge("row subsets must fit in 32 bits");
    const std::size_t vars = problem.graph.edge_count();
    const PolyMatrix c = symbolic_controllability_matrix(problem.graph, problem.control_node);

    // minors[S] = det of rows S (ascending) against columns 0..|S|-1.
    std::unordered_map<std::uint32_t, MultiPoly> minors;
    for (std::size_t r = 0; r < n; ++r)
        if (!c(r, 0).is_zero()) minors.emplace(std::uint32_t{1} << r, c(r, 0));

    for (std::size_t k = 1; k < n; ++k) {
        // Laplace along column k: minor(S + r) collects +-c(r, k) * minor(S),
        // the sign counting rows of S that sit below r.
        std::unordered_map<std::uint32_t, std::vector<std::pair<MultiPoly, const MultiPoly*>>> parts;
        for (const auto& [rows, minor] : minors) {
            for (std::size_t r = 0; r < n; ++r) {
                const std::uint32_t bit = std::uint32_t{1} << r;
                if ((rows & bit) || c(r, k).is_zero()) continue;
                const int below = std::popcount(rows & ~((bit << 1) - 1));
                parts[rows | bit].emplace_back(below % 2 ? -c(r, k) : c(r, k), &minor);
            }
        }
        std::unordered_map<std::uint32_t, MultiPoly> next;
        std::vector<std::pair<const MultiPoly*, const MultiPoly*>> pairs;
        for (const auto& [rows, list] : parts) {
            pairs.clear();
            for (const auto& [factor, minor] : list) pairs.emplace_back(&factor, minor);
            MultiPoly sum = sum_of_products(vars, pairs);
            if (!sum.is_zero()) next.emplace(rows, std::move(sum));
        }
        minors = std::move(next);
    }

    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    auto it = minors.find(all);
    return it == minors.end() ? MultiPoly(vars) : it->second;
}

Rational poly_eval(const MultiPoly& phi, const GraphSpec& graph, const WeightAssignment& point) {
    if (phi.variable_count() != graph.edge_count())
        throw InvalidParameter("polynomial ring does not match the graph's edge set");
    std::vector<Rational> values;
    values.reserve(graph.edge_count());
    for (const Edge& e : graph.edges()) {
        const Rational* w = point.find(e);
        if (!w)
            throw MissingVariable("no weight for edge {" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + "}");
        values.push_back(*w);
    }
    return phi.evaluate(values);
}

std::vector<Rational> GridAxis::values() const {
    if (steps == 0) throw InvalidParameter("grid axis needs at least one step");
    std::vector<Rational> out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(lo);
        return out;
    }
    const Rational stride = (hi - lo) / Rational(static_cast<unsigned long>(steps - 1));
    for (std::size_t i = 0; i < steps; ++i) out.push_back(lo + stride * Rational(static_cast<unsigned long>(i)));
    return out;
}

VarietySample variety_sample(const MultiPoly& phi, const std::vector<GridAxis>& grid,
                             std::vector<std::string> variables, std::size_t cap) {
    if (grid.size() != phi.variable_count())
        throw InvalidParameter("grid has " + std::to_string(grid.size()) + " axes for " +
                               std::to_string(phi.variable_count()) + " variables");
    if (variables.size() != grid.size()) throw InvalidParameter("variable name count mismatch");

    std::size_t total = 1;
    for (const auto& axis : grid) {
        if (axis.steps == 0) throw InvalidParameter("grid axis needs at least one step");
        if (total > cap / axis.steps)
            throw GridTooLarge("grid exceeds the cap of " + std::to_string(cap) + " points");
        total *= axis.steps;
    }

    std::vector<std::vector<Rational>> axes;
    for (const auto& axis : grid) axes.push_back(axis.values());

    VarietySample sample{std::move(variables), grid, {}};
    sample.points.reserve(total);
    // Odometer over the grid, last axis fastest.
    std::vector<std::size_t> index(grid.size(), 0);
    std::vector<Rational> point(grid.size());
    for (std::size_t count = 0; count < total; ++count) {
        for (std::size_t v = 0; v < grid.size(); ++v) point[v] = axes[v][index[v]];
        Rational value = phi.evaluate(point);
        const bool zero = sgn(value) == 0;
        sample.points.push_back({point, std::move(value), zero});
        for (std::size_t v = grid.size(); v-- > 0;) {
            if (++index[v] < grid[v].steps) break;
            index[v] = 0;
        }
    }
    return sample;
}

std::string to_csv(const VarietySample& sample) {
    std::ostringstream out;
    for (const auto& name : sample.variables) out << name << ',';
    out << "phi,on_variety\n";
    for (const auto& p : sample.points) {
        for (const auto& w : p.weights) out << format_rational(w) << ',';
        out << format_rational(p.value) << ',' << (p.on_variety ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace symctrl
