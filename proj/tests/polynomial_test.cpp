#include <symctrl/errors.hpp>
#include <symctrl/polynomial.hpp>

#include <gtest/gtest.h>

#include <random>

namespace symctrl {
namespace {

const std::vector<std::string> kNames{"x", "y", "z"};

MultiPoly var(std::size_t i) { return MultiPoly::variable(3, i); }
MultiPoly num(long c) { return MultiPoly::constant(3, Integer(c)); }

MultiPoly random_poly(std::mt19937_64& rng) {
    std::vector<Term> terms;
    const int count = static_cast<int>(rng() % 6);
    for (int t = 0; t < count; ++t) {
        std::vector<std::uint16_t> e(3);
        for (auto& x : e) x = static_cast<std::uint16_t>(rng() % 3);
        terms.push_back({Monomial(e), Integer(static_cast<long>(rng() % 11) - 5)});
    }
    return MultiPoly::from_terms(3, std::move(terms));
}

TEST(MultiPoly, ZeroIsEmptyAndCoefficientsNeverZero) {
    MultiPoly zero(3);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_TRUE((var(0) - var(0)).is_zero());
    EXPECT_TRUE(num(0).is_zero());
    auto p = MultiPoly::from_terms(3, {{Monomial({1, 0, 0}), Integer(2)}, {Monomial({1, 0, 0}), Integer(-2)}});
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ((var(0) * num(0)).terms().size(), 0u);
}

TEST(MultiPoly, GradedLexOrderAndPrinting) {
    // x^2 z - y^2 z: equal degree, x-heavy term first.
    auto p = var(0) * var(0) * var(2) - var(1) * var(1) * var(2);
    EXPECT_EQ(p.to_string(kNames), "x^2*z - y^2*z");
    auto q = var(1) * num(-3) + num(7) + var(0) * var(0);
    EXPECT_EQ(q.to_string(kNames), "x^2 - 3*y + 7");
    EXPECT_EQ(num(-1).to_string(kNames), "-1");
    EXPECT_EQ(MultiPoly(3).to_string(kNames), "0");
    EXPECT_EQ((num(0) - var(2)).to_string(kNames), "-z");
    EXPECT_EQ(p.total_degree(), 3u);
    EXPECT_THROW(p.to_string({"x"}), InvalidParameter);
}

TEST(MultiPoly, EvaluatesExactly) {
    auto p = var(0) * var(0) * var(2) - var(1) * var(1) * var(2);
    std::vector<Rational> at{Rational(2), Rational(1), Rational(1)};
    EXPECT_EQ(p.evaluate(at), 3);
    std::vector<Rational> half{Rational(1, 2), Rational(0), Rational(4)};
    EXPECT_EQ(p.evaluate(half), 1);
    EXPECT_THROW(p.evaluate(std::vector<Rational>{Rational(1)}), MissingVariable);
}

TEST(MultiPoly, RingAxiomsOnRandomPolynomials) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        EXPECT_EQ((p + q) - q, p);
        EXPECT_EQ(p * num(1), p);
        EXPECT_EQ(p + MultiPoly(3), p);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(-(-p), p);
        EXPECT_EQ(p * Integer(3), p + p + p);

        std::vector<Rational> x{Rational(static_cast<long>(rng() % 7) - 3), Rational(1, 2),
                                Rational(static_cast<long>(rng() % 5))};
        EXPECT_EQ((p * q).evaluate(x), p.evaluate(x) * q.evaluate(x));
        if (!p.is_zero() && !q.is_zero()) EXPECT_EQ((p * q).total_degree(), p.total_degree() + q.total_degree());
    }
}

// Huge coefficients force the generic product; small ones take the packed
// path. Both must agree.
TEST(MultiPoly, PackedAndGenericProductsAgree) {
    std::mt19937_64 rng(43);
    const Integer big("1000000000000000000000000000000000000000");
    for (int t = 0; t < 100; ++t) {
        auto p = random_poly(rng), q = random_poly(rng);
        EXPECT_EQ((p * big) * q, (p * q) * big);
    }
    // Exponents too wide to pack.
    auto x = var(0);
    MultiPoly high = num(1);
    for (int k = 0; k < 60; ++k) high = high * x;
    EXPECT_EQ(high.total_degree(), 60u);
    EXPECT_EQ((high * high).total_degree(), 120u);
    EXPECT_EQ((high * high).evaluate(std::vector<Rational>{Rational(1, 2), 0, 0}), Rational(1, 1) / (Integer(1) << 120));
}

TEST(MultiPoly, SumOfProducts) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 50; ++t) {
        std::vector<MultiPoly> a, b;
        for (int i = 0; i < 4; ++i) a.push_back(random_poly(rng)), b.push_back(random_poly(rng));
        if (t % 2) b[0] *= Integer("99999999999999999999999999999");
        std::vector<std::pair<const MultiPoly*, const MultiPoly*>> pairs;
        MultiPoly expected(3);
        for (int i = 0; i < 4; ++i) {
            pairs.emplace_back(&a[i], &b[i]);
            expected += a[i] * b[i];
        }
        EXPECT_EQ(sum_of_products(3, pairs), expected);
    }
    EXPECT_TRUE(sum_of_products(3, {}).is_zero());
    const MultiPoly two = MultiPoly::variable(2, 0);
    const std::pair<const MultiPoly*, const MultiPoly*> bad{&two, &two};
    EXPECT_THROW(sum_of_products(3, {&bad, 1}), InvalidParameter);
}

TEST(MultiPoly, JsonRoundTrip) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 50; ++t) {
        auto p = random_poly(rng) * Integer("123456789012345678901234567890");
        EXPECT_EQ(MultiPoly::from_json(p.to_json(kNames)), p);
    }
    EXPECT_THROW(MultiPoly::from_json(nlohmann::json{{"terms", 3}}), InvalidParameter);
}

TEST(MultiPoly, RingMismatchIsAnError) {
    EXPECT_THROW(MultiPoly::variable(2, 0) + MultiPoly::variable(3, 0), InvalidParameter);
    EXPECT_THROW(MultiPoly::variable(2, 2), InvalidParameter);
}

}  // namespace
}  // namespace symctrl
