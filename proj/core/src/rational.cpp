#include "symctrl/rational.hpp"

#include <cctype>

namespace symctrl {
namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<Integer> parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    Integer z(std::string(s), 10);
    if (negative) z = -z;
    return z;
}

Integer pow10(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        auto den_text = text.substr(slash + 1);
        if (!num || !all_digits(den_text)) return std::nullopt;
        Integer den(std::string(den_text), 10);
        if (den == 0) return std::nullopt;
        Rational q(*num, den);
        q.canonicalize();
        return q;
    }

    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_int = parse_integer(text.substr(e + 1));
        if (!exp_int || !exp_int->fits_slong_p()) return std::nullopt;
        exponent = exp_int->get_si();
        if (exponent > 100000 || exponent < -100000) return std::nullopt;
        mantissa = text.substr(0, e);
    }

    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }

    std::string digits;
    std::size_t fraction_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        auto int_part = mantissa.substr(0, dot);
        auto frac_part = mantissa.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) return std::nullopt;
        if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
        if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;
        digits = std::string(int_part) + std::string(frac_part);
        fraction_digits = frac_part.size();
    } else {
        if (!all_digits(mantissa)) return std::nullopt;
        digits = std::string(mantissa);
    }

    Integer num(digits, 10);
    if (negative) num = -num;
    long scale = exponent - static_cast<long>(fraction_digits);
    Rational q;
    if (scale >= 0) {
        q = Rational(num * pow10(static_cast<unsigned long>(scale)));
    } else {
        q = Rational(num, pow10(static_cast<unsigned long>(-scale)));
        q.canonicalize();
    }
    return q;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::uint64_t reduce_mod(const Integer& value, std::uint64_t p) {
    Integer r;
    Integer modulus;
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return count == 0 ? 0 : out;
}

}  // namespace symctrl
