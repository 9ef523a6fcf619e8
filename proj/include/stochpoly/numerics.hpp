#pragma once

// Exact integer and rational arithmetic plus the combinatorial helpers used
// by the bound formulas. BigInt and Rational are GMP's C++ value types; every
// Rational produced by this library is kept in lowest terms with a positive
// denominator.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stochpoly {

using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, k) by the multiplicative formula with exact division at every step.
/// Returns 0 when k < 0 or k > n. Throws std::invalid_argument if n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

/// Exact base^e. A negative exponent inverts; throws std::domain_error for
/// a zero base with e < 0.
Rational rational_pow(const Rational& base, std::int64_t e);

/// p/q reduced to lowest terms. Throws std::domain_error when q == 0.
Rational make_rational(const BigInt& p, const BigInt& q = 1);

/// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only, q > 0). The
/// result is canonicalized, so "2/4" reads as 1/2. Throws
/// std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Three-way sign: -1, 0 or 1.
int sign(const Rational& value);
int sign(const BigInt& value);

}  // namespace stochpoly
