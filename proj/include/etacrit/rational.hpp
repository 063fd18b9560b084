#pragma once

// Exact rationals backed by GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator, zero as 0/1) after every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace etacrit {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "p/q", or a plain decimal such as "1e-8" or "0.25" exactly.
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& q);

/// floor(q) as int64; throws std::out_of_range if it does not fit.
std::int64_t floor_int64(const Rational& q);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& q, int significant_digits = 15);

/// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Exact sum by balanced binary splitting; avoids the quadratic growth of a
/// left fold when the terms have many distinct denominators.
Rational sum_balanced(std::span<const Rational> terms);

}  // namespace etacrit
