#include "oracles/oracles.hpp"

#include <symctrl/certify.hpp>
#include <symctrl/errors.hpp>
#include <symctrl/generate.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace symctrl {
namespace {

GraphSpec star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return GraphSpec(leaves + 1, edges);
}

const GraphSpec kP3(3, {{0, 1}, {1, 2}});

TEST(UnitPathCertificate, SmallPaths) {
    auto c = unit_path_certificate(kP3, {{0, 1, 2}});
    EXPECT_EQ(c.verdict, Verdict::StructurallyControllable);
    EXPECT_EQ(c.method, Method::HamiltonianPath);
    EXPECT_EQ(c.failure_bound, 0.0);
    EXPECT_EQ(std::get<HamPathWitness>(c.witness).determinant, 1);

    GraphSpec p2(2, {{0, 1}});
    auto d = std::get<HamPathWitness>(unit_path_certificate(p2, {{0, 1}}).witness).determinant;
    EXPECT_EQ(abs(d), 1);

    EXPECT_THROW(unit_path_certificate(kP3, {{1, 0, 2}}), InvalidParameter);
}

TEST(UnitPathCertificate, SmallWorld234HasUnitDeterminant) {
    auto g = generate(GraphModel::watts_strogatz(4, 0.1), 234, 7);
    auto search = find_hamiltonian_path(g, 0, 10'000'000);
    ASSERT_TRUE(search.path);
    auto c = unit_path_certificate(g, *search.path);
    EXPECT_EQ(abs(std::get<HamPathWitness>(c.witness).determinant), 1);
}

TEST(UnitPathCertificate, DeterminantIsAlwaysUnit) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = generate(GraphModel::erdos_renyi(0.5), 4 + seed % 20, seed);
        auto r = find_hamiltonian_path(g, static_cast<Vertex>(seed % g.vertex_count()), 1'000'000);
        if (!r.path) continue;
        auto c = unit_path_certificate(g, *r.path);
        ASSERT_EQ(abs(std::get<HamPathWitness>(c.witness).determinant), 1) << "seed " << seed;
    }
}

TEST(SzFailureBound, Examples) {
    EXPECT_DOUBLE_EQ(sz_failure_bound(5, 1, 1u << 20, kDefaultPrime), 10.0 / (1u << 20));
    EXPECT_DOUBLE_EQ(sz_failure_bound(2, 1, 2, kDefaultPrime), 0.5);
    EXPECT_NEAR(sz_failure_bound(5, 3, 1u << 20, kDefaultPrime), std::pow(10.0 / (1u << 20), 3), 1e-30);
    EXPECT_NEAR(sz_failure_bound(5, 3, 1u << 20, kDefaultPrime), 8.7e-16, 0.05e-16);
    // D exceeds the sample range: clamped.
    EXPECT_EQ(sz_failure_bound(100, 4, 8, kDefaultPrime), 1.0);
    // The field, not the range, limits the sample space.
    EXPECT_DOUBLE_EQ(sz_failure_bound(3, 1, 1000, 7), 3.0 / 7.0);
    EXPECT_EQ(sz_failure_bound(1, 5, 2, kDefaultPrime), 0.0);
}

TEST(RandomizedCertify, Examples) {
    auto p3 = randomized_certify({kP3, std::nullopt, 0}, 1, 1u << 20, 1);
    EXPECT_EQ(p3.verdict, Verdict::StructurallyControllable);
    EXPECT_EQ(p3.method, Method::Randomized);
    const auto& w = std::get<RandomWitness>(p3.witness);
    ASSERT_TRUE(w.determinant);
    EXPECT_NE(*w.determinant, 0);
    EXPECT_EQ(reduce_mod(w.determinant->get_num(), w.prime), w.residue);
    for (const auto& x : w.weights) {
        EXPECT_GE(x, 1);
        EXPECT_LE(x, 1u << 20);
    }

    auto s = randomized_certify({star(3), std::nullopt, 0}, 16, 1u << 20, 0);
    EXPECT_EQ(s.verdict, Verdict::Inconclusive);
    EXPECT_EQ(s.trials_run, 16u);
    EXPECT_LE(s.failure_bound, std::pow(6.0 / (1u << 20), 16) * (1 + 1e-12));
    EXPECT_GT(s.failure_bound, 0.0);

    GraphSpec single(1, {});
    EXPECT_EQ(randomized_certify({single, std::nullopt, 0}, 1, 2, 0).verdict, Verdict::StructurallyControllable);
}

TEST(RandomizedCertify, RejectsBadParameters) {
    EXPECT_THROW(randomized_certify({kP3, std::nullopt, 0}, 0, 16, 0), InvalidParameter);
    EXPECT_THROW(randomized_certify({kP3, std::nullopt, 0}, 1, 1, 0), InvalidParameter);
    EXPECT_THROW(randomized_certify({kP3, std::nullopt, 0}, 1, 16, 0, 15), InvalidParameter);
    EXPECT_THROW(randomized_certify({kP3, std::nullopt, 5}, 1, 16, 0), IndexOutOfRange);
}

TEST(Certify, Examples) {
    auto end = certify({kP3, std::nullopt, 0}, Strategy::Auto);
    EXPECT_EQ(end.verdict, Verdict::StructurallyControllable);
    EXPECT_EQ(end.method, Method::HamiltonianPath);

    // The mirror symmetry makes rows 0 and 2 of C proportional for every
    // weight choice, so the middle of P3 is a genuine negative.
    auto middle = certify({kP3, std::nullopt, 1}, Strategy::Auto);
    EXPECT_EQ(middle.verdict, Verdict::GenericallyUncontrollable);
    EXPECT_EQ(middle.method, Method::Symbolic);
    ASSERT_TRUE(middle.search);
    EXPECT_EQ(middle.search->status, SearchStatus::Exhausted);

    // An inner vertex of P4 has no Hamiltonian path either, yet phi != 0.
    GraphSpec p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto inner = certify({p4, std::nullopt, 1}, Strategy::Auto);
    EXPECT_EQ(inner.verdict, Verdict::StructurallyControllable);
    EXPECT_EQ(inner.method, Method::Randomized);
    ASSERT_TRUE(inner.search);
    EXPECT_EQ(inner.search->status, SearchStatus::Exhausted);

    auto centre = certify({star(3), std::nullopt, 0}, Strategy::Auto);
    EXPECT_EQ(centre.verdict, Verdict::GenericallyUncontrollable);
    EXPECT_EQ(centre.method, Method::Symbolic);
    EXPECT_TRUE(std::get<SymbolicZeroWitness>(centre.witness).phi.is_zero());
    EXPECT_EQ(centre.failure_bound, 0.0);
}

TEST(Certify, DisconnectedGraphUsesZeroRows) {
    GraphSpec g(5, {{0, 1}, {2, 3}});
    auto c = certify({g, std::nullopt, 1}, Strategy::Auto);
    EXPECT_EQ(c.verdict, Verdict::GenericallyUncontrollable);
    EXPECT_EQ(c.method, Method::Connectivity);
    EXPECT_EQ(std::get<SymbolicZeroWitness>(c.witness).unreachable, (std::vector<Vertex>{2, 3, 4}));
    EXPECT_TRUE(verify_certificate(g, c).ok);
}

TEST(Certify, SingleRouteStrategies) {
    auto ham = certify({kP3, std::nullopt, 1}, Strategy::HamPath);
    EXPECT_EQ(ham.verdict, Verdict::Inconclusive);
    ASSERT_TRUE(ham.search);
    EXPECT_EQ(ham.search->status, SearchStatus::Exhausted);

    auto sym = certify({kP3, std::nullopt, 1}, Strategy::Symbolic);
    EXPECT_EQ(sym.verdict, Verdict::GenericallyUncontrollable);
    EXPECT_EQ(sym.method, Method::Symbolic);
    auto sym_end = certify({kP3, std::nullopt, 0}, Strategy::Symbolic);
    EXPECT_EQ(sym_end.verdict, Verdict::StructurallyControllable);
    EXPECT_TRUE(std::holds_alternative<RandomWitness>(sym_end.witness));

    auto big = generate(GraphModel::path(), 9, 0);
    auto too_big = certify({big, std::nullopt, 0}, Strategy::Symbolic);
    EXPECT_EQ(too_big.verdict, Verdict::Inconclusive);

    EXPECT_EQ(parse_strategy("ham-path"), Strategy::HamPath);
    EXPECT_EQ(parse_strategy("bogus"), std::nullopt);
    for (auto s : {Strategy::Auto, Strategy::HamPath, Strategy::Randomized, Strategy::Symbolic})
        EXPECT_EQ(parse_strategy(to_string(s)), s);
}

TEST(Certify, Deterministic) {
    auto g = generate(GraphModel::erdos_renyi(0.3), 30, 5);
    for (auto strategy : {Strategy::Auto, Strategy::Randomized}) {
        CertifyOptions o;
        o.seed = 99;
        auto a = certify({g, std::nullopt, 3}, strategy, o);
        auto b = certify({g, std::nullopt, 3}, strategy, o);
        EXPECT_EQ(a, b);
        EXPECT_EQ(to_json(a, g).dump(), to_json(b, g).dump());
    }
}

TEST(CertificateJson, RoundTripsAndVerifies) {
    std::vector<std::pair<GraphSpec, Vertex>> cases{
        {kP3, 0}, {kP3, 1}, {star(3), 0}, {GraphSpec(4, {{0, 1}}), 0}, {GraphSpec(1, {}), 0}};
    for (const auto& [g, node] : cases)
        for (auto strategy : {Strategy::Auto, Strategy::Randomized, Strategy::HamPath, Strategy::Symbolic}) {
            auto c = certify({g, std::nullopt, node}, strategy);
            auto back = certificate_from_json(to_json(c, g));
            EXPECT_EQ(back, c);
            auto v = verify_certificate(g, back);
            EXPECT_TRUE(v.ok) << v.reason;
        }
    EXPECT_THROW(certificate_from_json(nlohmann::json{{"verdict", "Maybe"}}), InvalidParameter);
}

TEST(VerifyCertificate, RejectsTamperedWitnesses) {
    auto c = certify({kP3, std::nullopt, 0}, Strategy::Auto);
    auto tampered = c;
    std::get<HamPathWitness>(tampered.witness).path.vertices = {0, 2, 1};
    EXPECT_FALSE(verify_certificate(kP3, tampered).ok);

    auto r = randomized_certify({kP3, std::nullopt, 0}, 4, 1000, 3);
    ASSERT_EQ(r.verdict, Verdict::StructurallyControllable);
    std::get<RandomWitness>(r.witness).residue += 1;
    EXPECT_FALSE(verify_certificate(kP3, r).ok);

    auto zero = certify({star(3), std::nullopt, 0}, Strategy::Auto);
    EXPECT_FALSE(verify_certificate(kP3, zero).ok);
}

// phi == 0 exactly when every random evaluation vanishes, on every small
// connected graph and control node.
TEST(RandomizedCertify, InconclusiveIffPolynomialVanishes) {
    std::size_t zero = 0, total = 0;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : oracle::connected_graphs_up_to_isomorphism(n))
            for (Vertex node = 0; node < n; ++node, ++total) {
                const bool vanishes = symbolic_det({g, std::nullopt, node}).is_zero();
                auto c = randomized_certify({g, std::nullopt, node}, 4, 1u << 20, node);
                ASSERT_EQ(c.verdict == Verdict::Inconclusive, vanishes);
                zero += vanishes;
            }
    EXPECT_GT(zero, 0u);
    EXPECT_LT(zero, total);
}

}  // namespace
}  // namespace symctrl
