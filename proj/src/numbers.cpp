#include "triprimes/numbers.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace triprimes {

BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt pow_big(std::uint64_t base, std::uint64_t exp) {
  return pow_big(BigInt(static_cast<unsigned long>(base)), exp);
}

Rational pow_rational(const Rational& base, std::uint64_t exp) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return r;  // powers of a canonical fraction stay canonical
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return BigInt(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool pow_fits_uint128(std::uint64_t base, std::uint64_t k) {
  if (base <= 1) return true;
  unsigned width = std::bit_width(base);
  return k <= 126 / width;
}

uint128 pow_u128(std::uint64_t base, std::uint64_t k) {
  uint128 r = 1;
  uint128 b = base;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string to_decimal(const BigInt& v) { return v.get_str(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  Rational q;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad rational literal: " + text);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    q = Rational(BigInt(num)) / Rational(d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("bad decimal literal: " + text);
    BigInt scale = pow_big(BigInt(10), frac.size());
    q = Rational(BigInt(whole) * scale + BigInt(frac)) / Rational(scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad integer literal: " + text);
    q = Rational(BigInt(s));
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }

std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace triprimes
