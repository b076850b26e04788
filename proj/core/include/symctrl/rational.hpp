#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace symctrl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an exact decimal ("-1.25", "3", "2.5e-3") or a fraction ("7/3").
/// Returns nullopt on malformed text or a zero denominator. No binary
/// floating point is involved.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string format_rational(const Rational& value);

/// Residue of an integer in [0, p).
std::uint64_t reduce_mod(const Integer& value, std::uint64_t p);

}  // namespace symctrl
