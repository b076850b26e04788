#pragma once

// Test-only reference computations. Each one takes a deliberately different
// route from the library code it checks: cofactor expansion instead of
// elimination, permutation enumeration instead of pruned search, and so on.

#include <symctrl/graph.hpp>
#include <symctrl/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace symctrl::oracle {

using RationalRows = std::vector<std::vector<Rational>>;

/// Determinant by cofactor expansion along the first row. Exponential; n <= 8.
inline Rational cofactor_det(const RationalRows& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sgn(m[0][c]) == 0) continue;
        RationalRows minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][c] * cofactor_det(minor);
        if (c % 2) total -= term;
        else total += term;
    }
    return total;
}

/// Rank by plain Gauss-Jordan over Q (fractions allowed).
inline std::size_t gauss_rank(RationalRows m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Dense controllability matrix by explicit powers A^k (the library uses
/// repeated matrix-vector products instead).
inline RationalRows controllability_by_powers(const RationalRows& a, std::size_t node) {
    const std::size_t n = a.size();
    RationalRows power(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    RationalRows c(n, std::vector<Rational>(n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) c[i][k] = power[i][node];
        RationalRows next(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) next[i][j] += power[i][l] * a[l][j];
        power = std::move(next);
    }
    return c;
}

inline RationalRows adjacency_rows(const GraphSpec& g, const std::vector<Rational>& weights) {
    const std::size_t n = g.vertex_count();
    RationalRows a(n, std::vector<Rational>(n));
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const Edge& e = g.edges()[k];
        a[e.u][e.v] = a[e.v][e.u] = weights[k];
    }
    return a;
}

/// Connectivity by union-find over the edge list.
inline bool connected(const GraphSpec& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (const Edge& e : g.edges()) {
        auto a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components <= 1;
}

/// Hamiltonian path existence from `start` by enumerating all orders of
/// the remaining vertices. n <= 9.
inline bool ham_path_exists(const GraphSpec& g, Vertex start) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != start) rest.push_back(v);
    do {
        Vertex prev = start;
        bool ok = true;
        for (Vertex v : rest) {
            if (!g.has_edge(prev, v)) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 6), found by minimising the edge bitmask over all vertex
/// permutations.
inline std::vector<GraphSpec> connected_graphs_up_to_isomorphism(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
    for (std::size_t s = 0; s < slots.size(); ++s) {
        slot_of[slots[s].first][slots[s].second] = s;
        slot_of[slots[s].second][slots[s].first] = s;
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::uint32_t> seen;
    std::vector<GraphSpec> out;
    const std::uint32_t total = std::uint32_t{1} << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::uint32_t canonical = mask;
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1) image |= std::uint32_t{1} << slot_of[perm[slots[s].first]][perm[slots[s].second]];
            canonical = std::min(canonical, image);
        }
        if (!seen.insert(canonical).second) continue;
        std::vector<Edge> edges;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (canonical >> s & 1) edges.emplace_back(slots[s].first, slots[s].second);
        GraphSpec g(n, std::move(edges));
        if (connected(g)) out.push_back(std::move(g));
    }
    return out;
}

inline Integer random_integer(std::mt19937_64& rng, long lo, long hi) {
    return Integer(static_cast<long>(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1))));
}

}  // namespace symctrl::oracle
