#include "oracles/oracles.hpp"

#include <symctrl/errors.hpp>
#include <symctrl/exact_matrix.hpp>
#include <symctrl/generate.hpp>
#include <symctrl/symbolic.hpp>

#include <gtest/gtest.h>

#include <random>

namespace symctrl {
namespace {

const GraphSpec kTriangle(3, {{0, 1}, {0, 2}, {1, 2}});

// Variables of the triangle in edge order: x0 = a12, x1 = a13, x2 = a23.
MultiPoly tri(std::size_t i) { return MultiPoly::variable(3, i); }

MultiPoly example_one_phi() { return tri(2) * tri(0) * tri(0) - tri(2) * tri(1) * tri(1); }

GraphSpec star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return GraphSpec(leaves + 1, edges);
}

TEST(EdgeVariableNames, IndexBaseAndWideIndices) {
    EXPECT_EQ(edge_variable_names(kTriangle), (std::vector<std::string>{"a01", "a02", "a12"}));
    EXPECT_EQ(edge_variable_names(kTriangle, 1), (std::vector<std::string>{"a12", "a13", "a23"}));
    GraphSpec wide(12, {{3, 11}});
    EXPECT_EQ(edge_variable_names(wide), (std::vector<std::string>{"a3_11"}));
}

TEST(SymbolicControllabilityMatrix, ExampleOneEntries) {
    auto c = symbolic_controllability_matrix(kTriangle, 0);
    EXPECT_EQ(c(0, 0), MultiPoly::constant(3, 1));
    EXPECT_TRUE(c(1, 0).is_zero());
    EXPECT_TRUE(c(0, 1).is_zero());
    EXPECT_EQ(c(1, 1), tri(0));
    EXPECT_EQ(c(2, 1), tri(1));
    EXPECT_EQ(c(0, 2), tri(0) * tri(0) + tri(1) * tri(1));
    EXPECT_EQ(c(1, 2), tri(1) * tri(2));
    EXPECT_EQ(c(2, 2), tri(0) * tri(2));
}

TEST(SymbolicDet, ExampleOne) {
    auto phi = symbolic_det({kTriangle, std::nullopt, 0});
    EXPECT_EQ(phi, example_one_phi());
    EXPECT_EQ(phi.to_string(edge_variable_names(kTriangle, 1)), "a12^2*a23 - a13^2*a23");
}

TEST(SymbolicDet, StarIsIdenticallyZeroAndP2IsItsWeight) {
    EXPECT_TRUE(symbolic_det({star(3), std::nullopt, 0}).is_zero());
    GraphSpec p2(2, {{0, 1}});
    EXPECT_EQ(symbolic_det({p2, std::nullopt, 0}), MultiPoly::variable(1, 0));
    GraphSpec single(1, {});
    EXPECT_EQ(symbolic_det({single, std::nullopt, 0}), MultiPoly::constant(0, 1));
}

TEST(SymbolicDet, SizeLimit) {
    auto p8 = generate(GraphModel::path(), 8, 0);
    EXPECT_THROW(symbolic_det({p8, std::nullopt, 0}), TooLarge);
    EXPECT_NO_THROW(symbolic_det({p8, std::nullopt, 0}, 8));
}

// Evaluating phi must commute with assembling the numeric matrix first.
TEST(SymbolicDet, RingHomomorphismConsistency) {
    std::mt19937_64 rng(41);
    std::vector<GraphSpec> graphs;
    for (std::size_t n = 1; n <= 5; ++n)
        for (auto& g : oracle::connected_graphs_up_to_isomorphism(n)) graphs.push_back(g);
    graphs.push_back(GraphSpec(5, {{0, 1}, {2, 3}}));
    graphs.push_back(GraphSpec(4, {{0, 1}, {1, 2}}));

    for (const auto& g : graphs) {
        const std::size_t n = g.vertex_count();
        for (Vertex node = 0; node < n; ++node) {
            auto phi = symbolic_det({g, std::nullopt, node});
            EXPECT_LE(phi.total_degree(), n * (n - 1) / 2);
            const int points = node == 0 ? 100 : 10;
            for (int t = 0; t < points; ++t) {
                std::vector<Rational> w;
                for (std::size_t e = 0; e < g.edge_count(); ++e) w.emplace_back(oracle::random_integer(rng, -20, 20));
                const auto weights = weights_in_edge_order(g, w);
                const auto numeric = det_bareiss(controllability_matrix(assemble_adjacency({g, weights, node}), node));
                ASSERT_EQ(poly_eval(phi, g, weights), numeric);
            }
        }
    }
}

TEST(PolyEval, ExampleOnePoints) {
    auto phi = example_one_phi();
    EXPECT_EQ(poly_eval(phi, kTriangle, weights_in_edge_order(kTriangle, {2, 1, 1})), 3);
    EXPECT_EQ(poly_eval(phi, kTriangle, weights_in_edge_order(kTriangle, {1, 1, 5})), 0);
    EXPECT_EQ(poly_eval(MultiPoly(3), kTriangle, weights_in_edge_order(kTriangle, {7, 8, 9})), 0);
    WeightAssignment partial;
    partial.set(Edge(0, 1), 1);
    EXPECT_THROW(poly_eval(phi, kTriangle, partial), MissingVariable);
}

TEST(VarietySample, ExampleOneGoldenSet) {
    std::vector<GridAxis> grid(3, GridAxis{Rational(-2), Rational(2), 5});
    auto sample = variety_sample(example_one_phi(), grid, edge_variable_names(kTriangle, 1));
    ASSERT_EQ(sample.points.size(), 125u);
    std::size_t on = 0;
    for (const auto& p : sample.points) {
        const auto& w = p.weights;  // a12, a13, a23
        const bool expected = w[2] == 0 || abs(w[0]) == abs(w[1]);
        EXPECT_EQ(p.on_variety, expected);
        EXPECT_EQ(p.on_variety, p.value == 0);
        on += p.on_variety;
    }
    // a23 = 0: 25 points; a23 != 0 and |a12| = |a13|: 4 * 9.
    EXPECT_EQ(on, 25u + 36u);
}

TEST(VarietySample, TrivialGrids) {
    auto zero = variety_sample(MultiPoly(2), {GridAxis{0, 1, 3}, GridAxis{Rational(1, 2), 1, 2}}, {"u", "v"});
    EXPECT_EQ(zero.points.size(), 6u);
    for (const auto& p : zero.points) EXPECT_TRUE(p.on_variety);

    auto single = variety_sample(MultiPoly::variable(1, 0), {GridAxis{0, 1, 2}}, {"a01"});
    ASSERT_EQ(single.points.size(), 2u);
    EXPECT_TRUE(single.points[0].on_variety);
    EXPECT_FALSE(single.points[1].on_variety);
    EXPECT_EQ(to_csv(single), "a01,phi,on_variety\n0,0,1\n1,1,0\n");
}

TEST(VarietySample, RationalStepsAndErrors) {
    GridAxis axis{Rational(0), Rational(1), 4};
    EXPECT_EQ(axis.values(), (std::vector<Rational>{0, Rational(1, 3), Rational(2, 3), 1}));
    EXPECT_THROW(variety_sample(MultiPoly(2), {axis}, {"a"}), InvalidParameter);
    std::vector<GridAxis> big(3, GridAxis{0, 1, 1000});
    EXPECT_THROW(variety_sample(MultiPoly(3), big, {"a", "b", "c"}), GridTooLarge);
}

}  // namespace
}  // namespace symctrl
