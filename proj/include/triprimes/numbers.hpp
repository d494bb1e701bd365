#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace triprimes {

using BigInt = mpz_class;
using Rational = mpq_class;
using uint128 = unsigned __int128;

// base^exp as an exact integer
BigInt pow_big(const BigInt& base, std::uint64_t exp);
BigInt pow_big(std::uint64_t base, std::uint64_t exp);

// base^exp for nonnegative exp, exact rational
Rational pow_rational(const Rational& base, std::uint64_t exp);

// C(n, k) as an exact integer
BigInt binomial(std::uint64_t n, std::uint64_t k);

// True when p1^k + p0^k vs p2^k can be compared entirely in 128-bit
// registers for any p0 <= p1 <= p2 (sum stays below 2^127).
bool pow_fits_uint128(std::uint64_t base, std::uint64_t k);
uint128 pow_u128(std::uint64_t base, std::uint64_t k);

std::string to_decimal(const BigInt& v);

// Parses "3", "-2.5", "1/2" into an exact rational. Throws
// std::invalid_argument on anything else (no exponent notation).
Rational rational_from_string(const std::string& text);

// Decimal rendering as numerator/denominator pair, canonical form.
std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);

bool is_integral(const Rational& q);

}  // namespace triprimes
