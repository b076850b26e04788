#include "symctrl/polynomial.hpp"

#include "symctrl/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace symctrl {
namespace {

bool descending(const Term& a, const Term& b) { return b.monomial < a.monomial; }

// Sorts descending and folds equal monomials together.
std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), descending);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coefficient += t.coefficient;
        } else {
            if (!out.empty() && out.back().coefficient == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coefficient == 0) out.pop_back();
    return out;
}

__extension__ using int128 = __int128;
__extension__ using uint128 = unsigned __int128;

struct KeyHash {
    std::size_t operator()(uint128 k) const noexcept {
        std::uint64_t x = static_cast<std::uint64_t>(k) ^ (static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL);
        x ^= x >> 31;
        x *= 0xbf58476d1ce4e5b9ULL;
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

unsigned bits_for(std::size_t value) {
    unsigned b = 1;
    while ((std::size_t{1} << b) <= value) ++b;
    return b;
}

Integer from_int128(int128 v) {
    const bool negative = v < 0;
    uint128 m = negative ? -static_cast<uint128>(v) : static_cast<uint128>(v);
    Integer out(static_cast<unsigned long>(m >> 64));
    out <<= 64;
    out += static_cast<unsigned long>(static_cast<std::uint64_t>(m));
    return negative ? Integer(-out) : out;
}

long coefficient_bits(const std::vector<Term>& terms) {
    long worst = 0;
    for (const auto& t : terms) {
        if (!mpz_fits_slong_p(t.coefficient.get_mpz_t())) return 1000;
        worst = std::max<long>(worst, static_cast<long>(mpz_sizeinbase(t.coefficient.get_mpz_t(), 2)));
    }
    return worst;
}

// sum_i a_i * b_i when every exponent vector packs into 128 bits and every
// partial sum provably fits in 127 bits. Returns false otherwise.
bool packed_sum_of_products(std::span<const std::pair<const MultiPoly*, const MultiPoly*>> pairs,
                            std::size_t nvars, std::vector<Term>& out) {
    std::size_t degree_bound = 0, products = 0;
    long magnitude = 0;
    for (const auto& [a, b] : pairs) {
        degree_bound = std::max(degree_bound, a->total_degree() + b->total_degree());
        products += a->terms().size() * b->terms().size();
        magnitude = std::max(magnitude, coefficient_bits(a->terms()) + coefficient_bits(b->terms()));
    }
    const unsigned bits = bits_for(degree_bound);
    if (degree_bound > std::numeric_limits<std::uint16_t>::max() || nvars * bits > 128) return false;
    if (magnitude + bits_for(products) > 125) return false;

    auto pack = [&](const Monomial& m) {
        uint128 key = 0;
        for (std::size_t v = 0; v < nvars; ++v) key = (key << bits) | m.exponents[v];
        return key;
    };
    std::unordered_map<uint128, int128, KeyHash> acc;
    acc.reserve(std::min<std::size_t>(products, std::size_t{1} << 22));
    std::vector<std::pair<uint128, long>> packed_b;
    for (const auto& [a, b] : pairs) {
        packed_b.clear();
        for (const auto& t : b->terms()) packed_b.emplace_back(pack(t.monomial), t.coefficient.get_si());
        for (const auto& ta : a->terms()) {
            const uint128 ka = pack(ta.monomial);
            const int128 ca = ta.coefficient.get_si();
            for (const auto& [kb, cb] : packed_b) acc[ka + kb] += ca * cb;
        }
    }

    const uint128 mask = (uint128{1} << bits) - 1;
    out.clear();
    out.reserve(acc.size());
    std::vector<std::uint16_t> e(nvars);
    for (const auto& [key, c] : acc) {
        if (c == 0) continue;
        uint128 k = key;
        for (std::size_t v = nvars; v-- > 0;) {
            e[v] = static_cast<std::uint16_t>(k & mask);
            k >>= bits;
        }
        out.push_back({Monomial(e), from_int128(c)});
    }
    return true;
}

}  // namespace

Monomial::Monomial(std::vector<std::uint16_t> e) : exponents(std::move(e)) {
    degree = std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

MultiPoly MultiPoly::constant(std::size_t variables, const Integer& c) {
    MultiPoly p(variables);
    if (c != 0) p.terms_.push_back({Monomial(std::vector<std::uint16_t>(variables, 0)), c});
    return p;
}

MultiPoly MultiPoly::variable(std::size_t variables, std::size_t index) {
    if (index >= variables) throw InvalidParameter("variable index out of range");
    std::vector<std::uint16_t> e(variables, 0);
    e[index] = 1;
    MultiPoly p(variables);
    p.terms_.push_back({Monomial(std::move(e)), Integer(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(std::size_t variables, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.monomial.exponents.size() != variables)
            throw InvalidParameter("term has the wrong number of exponents");
    MultiPoly p(variables);
    p.terms_ = canonicalize(std::move(terms));
    return p;
}

std::size_t MultiPoly::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw InvalidParameter("polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

MultiPoly& MultiPoly::merge(const MultiPoly& other, bool subtract) {
    check_compatible(other);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && b->monomial < a->monomial)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || a->monomial < b->monomial) {
            out.push_back(*b++);
            if (subtract) out.back().coefficient = -out.back().coefficient;
        } else {
            Integer c = a->coefficient;
            if (subtract) c -= b->coefficient;
            else c += b->coefficient;
            if (c != 0) out.push_back({std::move(a->monomial), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) { return merge(other, false); }
MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return merge(other, true); }

MultiPoly& MultiPoly::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= scalar;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;

    std::vector<Term> products;
    const std::pair<const MultiPoly*, const MultiPoly*> pair{&a, &b};
    if (packed_sum_of_products({&pair, 1}, a.nvars_, products)) {
        out.terms_ = canonicalize(std::move(products));
        return out;
    }
    products.reserve(a.terms_.size() * b.terms_.size());
    std::vector<std::uint16_t> e(a.nvars_);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (std::size_t v = 0; v < a.nvars_; ++v) {
                const unsigned sum = unsigned{ta.monomial.exponents[v]} + tb.monomial.exponents[v];
                if (sum > std::numeric_limits<std::uint16_t>::max())
                    throw TooLarge("exponent overflow in polynomial product");
                e[v] = static_cast<std::uint16_t>(sum);
            }
            Monomial m;
            m.degree = ta.monomial.degree + tb.monomial.degree;
            m.exponents = e;
            products.push_back({std::move(m), ta.coefficient * tb.coefficient});
        }
    }
    out.terms_ = canonicalize(std::move(products));
    return out;
}

MultiPoly sum_of_products(std::size_t variables,
                          std::span<const std::pair<const MultiPoly*, const MultiPoly*>> pairs) {
    for (const auto& [a, b] : pairs) {
        if (a->variable_count() != variables || b->variable_count() != variables)
            throw InvalidParameter("polynomials live in different rings");
    }
    std::vector<Term> terms;
    if (packed_sum_of_products(pairs, variables, terms)) return MultiPoly::from_terms(variables, std::move(terms));
    MultiPoly total(variables);
    for (const auto& [a, b] : pairs) total += *a * *b;
    return total;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw MissingVariable("evaluation point has the wrong dimension");
    // powers[v][k] = point[v]^k, filled lazily up to the largest exponent seen.
    std::vector<std::vector<Rational>> powers(nvars_, std::vector<Rational>{Rational(1)});
    Rational total = 0;
    for (const auto& t : terms_) {
        Rational value = t.coefficient;
        for (std::size_t v = 0; v < nvars_ && sgn(value) != 0; ++v) {
            const std::size_t k = t.monomial.exponents[v];
            if (k == 0) continue;
            auto& pw = powers[v];
            while (pw.size() <= k) pw.push_back(pw.back() * point[v]);
            value *= pw[k];
        }
        total += value;
    }
    return total;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw InvalidParameter("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = sgn(t.coefficient) < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        const Integer magnitude = abs(t.coefficient);
        bool wrote = false;
        if (magnitude != 1 || t.monomial.degree == 0) {
            out << magnitude.get_str();
            wrote = true;
        }
        for (std::size_t v = 0; v < nvars_; ++v) {
            const auto k = t.monomial.exponents[v];
            if (k == 0) continue;
            if (wrote) out << '*';
            out << names[v];
            if (k > 1) out << '^' << k;
            wrote = true;
        }
    }
    return out.str();
}

nlohmann::json MultiPoly::to_json(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw InvalidParameter("variable name count mismatch");
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : terms_)
        terms.push_back({{"exponents", t.monomial.exponents}, {"coefficient", t.coefficient.get_str()}});
    return {{"variables", names}, {"terms", std::move(terms)}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    try {
        const std::size_t nvars = j.at("variables").size();
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exponents").get<std::vector<std::uint16_t>>();
            Integer c;
            if (c.set_str(t.at("coefficient").get<std::string>(), 10) != 0)
                throw InvalidParameter("malformed coefficient");
            terms.push_back({Monomial(std::move(e)), std::move(c)});
        }
        return from_terms(nvars, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("malformed polynomial JSON: ") + e.what());
    }
}

}  // namespace symctrl
