#include "oracles/oracles.hpp"

#include <symctrl/errors.hpp>
#include <symctrl/exact_matrix.hpp>
#include <symctrl/generate.hpp>

#include <gtest/gtest.h>

#include <random>

namespace symctrl {
namespace {

ExactMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (auto row : rows) {
        r.emplace_back();
        for (long x : row) r.back().emplace_back(x);
    }
    return ExactMatrix::from_rows(r);
}

ControlProblem triangle(long a12, long a13, long a23) {
    GraphSpec g(3, {{0, 1}, {0, 2}, {1, 2}});
    return {g, weights_in_edge_order(g, {Rational(a12), Rational(a13), Rational(a23)}), 0};
}

oracle::RationalRows rows_of(const ExactMatrix& m) {
    oracle::RationalRows r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

ExactMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(oracle::random_integer(rng, lo, hi));
    return m;
}

TEST(AssembleAdjacency, ExampleOneLayout) {
    EXPECT_EQ(assemble_adjacency(triangle(2, 1, 1)), int_matrix({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}}));
}

TEST(AssembleAdjacency, EmptyAndPath) {
    GraphSpec empty(2, {});
    EXPECT_EQ(assemble_adjacency({empty, unit_weights(empty), 0}), ExactMatrix(2, 2));
    GraphSpec p3(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(assemble_adjacency({p3, unit_weights(p3), 0}), int_matrix({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
    EXPECT_THROW(assemble_adjacency({p3, std::nullopt, 0}), MissingWeights);
}

TEST(AssembleAdjacency, AlwaysSymmetricWithZeroDiagonal) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        GraphSpec g = generate(GraphModel::erdos_renyi(0.5), 2 + rng() % 8, rng());
        std::vector<Rational> w;
        for (std::size_t e = 0; e < g.edge_count(); ++e) w.emplace_back(oracle::random_integer(rng, -9, 9));
        auto a = assemble_adjacency({g, weights_in_edge_order(g, w), 0});
        for (std::size_t i = 0; i < a.rows(); ++i) {
            EXPECT_EQ(a(i, i), 0);
            for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_EQ(a(i, j), a(j, i));
        }
    }
}

TEST(ControllabilityMatrix, WorkedExamples) {
    auto a = assemble_adjacency(triangle(2, 1, 1));
    EXPECT_EQ(controllability_matrix(a, 0), int_matrix({{1, 0, 5}, {0, 2, 1}, {0, 1, 2}}));
    EXPECT_EQ(controllability_matrix(ExactMatrix(2, 2), 0), int_matrix({{1, 0}, {0, 0}}));
    GraphSpec p3(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(controllability_matrix(assemble_adjacency({p3, unit_weights(p3), 0}), 0),
              int_matrix({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_THROW(controllability_matrix(ExactMatrix(2, 3), 0), DimensionMismatch);
    EXPECT_THROW(controllability_matrix(ExactMatrix(2, 2), 2), IndexOutOfRange);
}

TEST(ControllabilityMatrix, AgreesWithExplicitPowersAndStartsAtIndicator) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 6;
        GraphSpec g = generate(GraphModel::erdos_renyi(0.6), n, rng());
        std::vector<Rational> w;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            Rational q(oracle::random_integer(rng, -5, 5), oracle::random_integer(rng, 1, 4));
            q.canonicalize();
            w.push_back(q);
        }
        const Vertex node = rng() % n;
        auto a = assemble_adjacency({g, weights_in_edge_order(g, w), node});
        auto c = controllability_matrix(a, node);
        EXPECT_EQ(rows_of(c), oracle::controllability_by_powers(rows_of(a), node));
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(c(i, 0), i == node ? 1 : 0);
    }
}

TEST(DetBareiss, WorkedExamples) {
    EXPECT_EQ(det_bareiss(int_matrix({{1, 0, 5}, {0, 2, 1}, {0, 1, 2}})), 3);
    EXPECT_EQ(oracle::cofactor_det(rows_of(int_matrix({{1, 0, 5}, {0, 2, 1}, {0, 1, 2}}))), 3);
    EXPECT_EQ(det_bareiss(ExactMatrix::identity(4)), 1);
    EXPECT_EQ(det_bareiss(int_matrix({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})), 1);
    EXPECT_EQ(det_bareiss(int_matrix({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(det_bareiss(ExactMatrix(0, 0)), 1);
    EXPECT_THROW(det_bareiss(ExactMatrix(2, 3)), DimensionMismatch);
}

TEST(DetBareiss, MatchesCofactorExpansionOnRationalMatrices) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 1 + rng() % 6;
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational q(oracle::random_integer(rng, -6, 6), oracle::random_integer(rng, 1, 5));
                q.canonicalize();
                m(i, j) = rng() % 4 == 0 ? Rational(0) : q;
            }
        EXPECT_EQ(det_bareiss(m), oracle::cofactor_det(rows_of(m)));
    }
}

TEST(DetBareiss, IntegerInputKeepsIntegerIntermediates) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 3 + rng() % 6;
        BareissStats stats;
        const auto det = det_bareiss(random_int_matrix(rng, n, n, -100, 100), &stats);
        EXPECT_EQ(stats.inexact_divisions, 0u);
        // Division by the leading 1 is skipped; later steps divide for real.
        if (det != 0) EXPECT_GT(stats.divisions, 0u);
    }
}

TEST(RankExact, WorkedExamples) {
    // Star K_{1,3} from the centre with weights 2, 3, 5: the Krylov columns
    // alternate between e0 and (0, 2, 3, 5), so the rank is 2.
    GraphSpec star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto a = assemble_adjacency({star, weights_in_edge_order(star, {Rational(2), Rational(3), Rational(5)}), 0});
    auto c = controllability_matrix(a, 0);
    EXPECT_EQ(rank_exact(c), 2u);
    EXPECT_EQ(oracle::gauss_rank(rows_of(c)), 2u);
    EXPECT_EQ(controllability_rank(a, 0), 2u);

    EXPECT_EQ(rank_exact(int_matrix({{1, 0, 5}, {0, 2, 1}, {0, 1, 2}})), 3u);
    EXPECT_EQ(rank_exact(ExactMatrix(3, 4)), 0u);
    EXPECT_EQ(rank_exact(int_matrix({{1, 2, 3}, {2, 4, 6}})), 1u);
}

TEST(RankExact, MatchesGaussJordanAndDeterminant) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rows = 1 + rng() % 6;
        const std::size_t cols = t % 2 ? rows : 1 + rng() % 6;
        // Small entries make singular matrices common.
        ExactMatrix m = random_int_matrix(rng, rows, cols, -1, 1);
        if (rows > 1 && rng() % 3 == 0)
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 2;
        const auto r = rank_exact(m);
        EXPECT_EQ(r, oracle::gauss_rank(rows_of(m)));
        if (m.square()) EXPECT_EQ(r == rows, det_bareiss(m) != 0);
    }
}

TEST(ControllabilityRank, EarlyExitAgreesWithFullRank) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 7;
        GraphSpec g = generate(GraphModel::erdos_renyi(0.4), n, rng());
        std::vector<Rational> w;
        for (std::size_t e = 0; e < g.edge_count(); ++e) w.emplace_back(oracle::random_integer(rng, 1, 3));
        const Vertex node = rng() % n;
        auto a = assemble_adjacency({g, weights_in_edge_order(g, w), node});
        EXPECT_EQ(controllability_rank(a, node), rank_exact(controllability_matrix(a, node)));
    }
}

}  // namespace
}  // namespace symctrl
