#pragma once

#include <symctrl/rational.hpp>

#include <nlohmann/json.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symctrl {

/// Exponent vector with its cached total degree. Ordering is graded
/// lexicographic with variable 0 most significant.
struct Monomial {
    std::uint32_t degree = 0;
    std::vector<std::uint16_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint16_t> e);

    auto operator<=>(const Monomial&) const = default;
};

struct Term {
    Monomial monomial;
    Integer coefficient;

    bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial with integer coefficients. Terms are kept
/// in strictly descending graded-lex order with no zero coefficients, so two
/// polynomials are equal iff their term lists are.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t variables = 0) : nvars_(variables) {}

    static MultiPoly constant(std::size_t variables, const Integer& c);
    static MultiPoly variable(std::size_t variables, std::size_t index);
    /// Sums the given terms, merging duplicates and dropping zeros.
    static MultiPoly from_terms(std::size_t variables, std::vector<Term> terms);

    std::size_t variable_count() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest total degree of a term; 0 for constants and the zero polynomial.
    std::size_t total_degree() const noexcept;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Integer& scalar);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Integer& s) { return a *= s; }

    bool operator==(const MultiPoly& other) const = default;

    /// Exact value at a point given in variable order.
    Rational evaluate(std::span<const Rational> point) const;

    /// Human-readable form, e.g. "a12^2*a23 - a13^2*a23". Terms appear in
    /// descending graded-lex order; unit coefficients are omitted.
    std::string to_string(const std::vector<std::string>& names) const;

    /// {"variables": [...], "terms": [{"exponents": [...], "coefficient": "..."}]}
    nlohmann::json to_json(const std::vector<std::string>& names) const;
    /// Inverse of to_json. Throws InvalidParameter on malformed input.
    static MultiPoly from_json(const nlohmann::json& j);

private:
    void check_compatible(const MultiPoly& other) const;
    MultiPoly& merge(const MultiPoly& other, bool subtract);

    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// sum_i a_i * b_i in one accumulation pass, without forming the
/// intermediate products as separate polynomials.
MultiPoly sum_of_products(std::size_t variables,
                          std::span<const std::pair<const MultiPoly*, const MultiPoly*>> pairs);

}  // namespace symctrl
