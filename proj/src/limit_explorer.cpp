#include "triprimes/limit_explorer.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <vector>

#include "triprimes/errors.hpp"

namespace triprimes {

const char* const kEpsilonTailCaveat =
    "threshold certified for the scanned window only; the tail beyond n_max "
    "is not checked and no finite scan can settle it";

namespace {

PrimeTriple triple_at(std::uint64_t n, const SieveConfig& config) {
  if (n == 0) throw std::invalid_argument("index must be >= 1");
  PrimeStream stream(config);
  std::uint64_t a = stream.next();
  std::uint64_t b = stream.next();
  std::uint64_t c = stream.next();
  for (std::uint64_t i = 1; i < n; i++) {
    a = b;
    b = c;
    c = stream.next();
  }
  return {n, a, b, c};
}

std::string rational_label(const Rational& q) {
  if (is_integral(q)) return numerator_string(q);
  return numerator_string(q) + "/" + denominator_string(q);
}

Rational make_ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

LimitSample a_value(const PrimeTriple& t, std::int64_t k) {
  LimitSample sample;
  sample.n = t.n;
  sample.k = k;
  if (k == 0) {
    sample.value = 2;
    sample.deviation = 0;
    return sample;
  }
  if (k > 0) {
    std::uint64_t e = std::uint64_t(k);
    sample.value =
        make_ratio(pow_big(t.p1, e) + pow_big(t.p, e), pow_big(t.p2, e));
  } else {
    std::uint64_t m = std::uint64_t(-(k + 1)) + 1;  // -k without overflow
    sample.value = make_ratio(
        pow_big(t.p2, m) * (pow_big(t.p, m) + pow_big(t.p1, m)),
        pow_big(t.p1 * BigInt(t.p), m));
  }
  sample.deviation = abs(sample.value - 2);
  return sample;
}

LimitSample a_value(std::uint64_t n, std::int64_t k,
                    const SieveConfig& config) {
  return a_value(triple_at(n, config), k);
}

Rational deviation_bound(const PrimeTriple& t, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("deviation bound needs k >= 1");
  std::uint64_t e = std::uint64_t(k);
  return 2 * make_ratio(pow_big(t.p2, e) - pow_big(t.p, e), pow_big(t.p2, e));
}

Rational deviation_bound(std::uint64_t n, std::int64_t k,
                         const SieveConfig& config) {
  return deviation_bound(triple_at(n, config), k);
}

EpsilonThreshold epsilon_threshold(std::int64_t k, const Rational& epsilon,
                                   std::uint64_t n_max,
                                   const ScanConfig& config) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");

  std::uint64_t last_at_or_above = 0;
  TripleStream stream(n_max, config.sieve);
  while (auto t = stream.next()) {
    LimitSample sample = a_value(*t, k);
    if (k > 0 && sample.value >= 2)
      throw std::logic_error("a_n^k reached 2 with positive exponent");
    if (k < 0 && sample.value <= 2)
      throw std::logic_error("a_n^k reached 2 with negative exponent");
    if (sample.deviation >= epsilon) last_at_or_above = t->n;
  }
  if (last_at_or_above == n_max)
    throw NoThresholdError(std::to_string(k), n_max);

  EpsilonThreshold result;
  result.k_label = std::to_string(k);
  result.epsilon = epsilon;
  result.n_max = n_max;
  result.threshold = last_at_or_above + 1;
  result.exact = true;
  result.precision_bits = 0;
  result.caveat = kEpsilonTailCaveat;
  return result;
}

namespace {

// Owning wrapper so every mpfr_t is cleared on all exit paths.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

void check_precision(unsigned precision_bits) {
  if (precision_bits < 8)
    throw std::invalid_argument("precision must be at least 8 bits");
  if (precision_bits > (1u << 20))
    throw ResourceLimitError("precision above 2^20 bits refused");
}

std::string outward_decimal(mpfr_srcptr v, unsigned precision_bits,
                            bool round_up) {
  int digits = int(precision_bits * 0.30103) + 2;
  std::vector<char> buf(std::size_t(digits) + 64);
  int written = mpfr_snprintf(buf.data(), buf.size(),
                              round_up ? "%.*RUe" : "%.*RDe", digits, v);
  if (written < 0 || std::size_t(written) >= buf.size())
    throw std::logic_error("mpfr rendering failed");
  return std::string(buf.data());
}

// Enclosure of x^k for exact rational 0 < x and k, bounds rounded outward.
// x^k is monotone in k (direction set by x vs 1), handled by pairing each
// endpoint of x with the opposite endpoint of k.
void pow_enclosure(mpfr_ptr lo, mpfr_ptr hi, const Rational& x,
                   mpfr_srcptr k_lo, mpfr_srcptr k_hi, mpfr_prec_t prec) {
  Real x_lo(prec), x_hi(prec);
  mpfr_set_q(x_lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(x_hi.get(), x.get_mpq_t(), MPFR_RNDU);
  bool below_one = x < 1;
  // For 0 < x < 1 the map k -> x^k decreases, so the lower bound takes
  // the larger exponent; for x > 1 it increases.
  mpfr_pow(lo, x_lo.get(), below_one ? k_hi : k_lo, MPFR_RNDD);
  mpfr_pow(hi, x_hi.get(), below_one ? k_lo : k_hi, MPFR_RNDU);
}

}  // namespace

RealLimitSample a_value_real(const PrimeTriple& t, const Rational& k,
                             unsigned precision_bits) {
  check_precision(precision_bits);
  const mpfr_prec_t prec = mpfr_prec_t(precision_bits);

  Real k_lo(prec), k_hi(prec);
  mpfr_set_q(k_lo.get(), k.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(k_hi.get(), k.get_mpq_t(), MPFR_RNDU);

  Rational x = make_ratio(BigInt(t.p1), BigInt(t.p2));
  Rational y = make_ratio(BigInt(t.p), BigInt(t.p2));
  Real xk_lo(prec), xk_hi(prec), yk_lo(prec), yk_hi(prec);
  pow_enclosure(xk_lo.get(), xk_hi.get(), x, k_lo.get(), k_hi.get(), prec);
  pow_enclosure(yk_lo.get(), yk_hi.get(), y, k_lo.get(), k_hi.get(), prec);

  Real value_lo(prec), value_hi(prec);
  mpfr_add(value_lo.get(), xk_lo.get(), yk_lo.get(), MPFR_RNDD);
  mpfr_add(value_hi.get(), xk_hi.get(), yk_hi.get(), MPFR_RNDU);

  // deviation = |value - 2|; the side is fixed by the sign of k because
  // both ratios sit strictly inside (0, 1).
  Real dev_lo(prec), dev_hi(prec);
  int k_sign = sgn(k);
  if (k_sign == 0) {
    mpfr_set_zero(dev_lo.get(), 1);
    mpfr_set_zero(dev_hi.get(), 1);
  } else if (k_sign > 0) {
    mpfr_ui_sub(dev_lo.get(), 2, value_hi.get(), MPFR_RNDD);
    mpfr_ui_sub(dev_hi.get(), 2, value_lo.get(), MPFR_RNDU);
  } else {
    mpfr_sub_ui(dev_lo.get(), value_lo.get(), 2, MPFR_RNDD);
    mpfr_sub_ui(dev_hi.get(), value_hi.get(), 2, MPFR_RNDU);
  }
  if (mpfr_sgn(dev_lo.get()) < 0) mpfr_set_zero(dev_lo.get(), 1);

  RealLimitSample sample;
  sample.n = t.n;
  sample.k_label = rational_label(k);
  sample.precision_bits = precision_bits;
  sample.value_lo = outward_decimal(value_lo.get(), precision_bits, false);
  sample.value_hi = outward_decimal(value_hi.get(), precision_bits, true);
  sample.deviation_lo = outward_decimal(dev_lo.get(), precision_bits, false);
  sample.deviation_hi = outward_decimal(dev_hi.get(), precision_bits, true);
  return sample;
}

RealLimitSample a_value_real(std::uint64_t n, const Rational& k,
                             unsigned precision_bits,
                             const SieveConfig& config) {
  return a_value_real(triple_at(n, config), k, precision_bits);
}

EpsilonThreshold epsilon_threshold_real(const Rational& k,
                                        const Rational& epsilon,
                                        std::uint64_t n_max,
                                        unsigned precision_bits,
                                        const ScanConfig& config) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  check_precision(precision_bits);
  const mpfr_prec_t prec = mpfr_prec_t(precision_bits);

  Real k_lo(prec), k_hi(prec);
  mpfr_set_q(k_lo.get(), k.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(k_hi.get(), k.get_mpq_t(), MPFR_RNDU);
  const int k_sign = sgn(k);

  std::uint64_t last_at_or_above = 0;
  TripleStream stream(n_max, config.sieve);
  while (auto t = stream.next()) {
    Real xk_lo(prec), xk_hi(prec), yk_lo(prec), yk_hi(prec);
    pow_enclosure(xk_lo.get(), xk_hi.get(),
                  make_ratio(BigInt(t->p1), BigInt(t->p2)), k_lo.get(),
                  k_hi.get(), prec);
    pow_enclosure(yk_lo.get(), yk_hi.get(),
                  make_ratio(BigInt(t->p), BigInt(t->p2)), k_lo.get(),
                  k_hi.get(), prec);
    Real value_lo(prec), value_hi(prec);
    mpfr_add(value_lo.get(), xk_lo.get(), yk_lo.get(), MPFR_RNDD);
    mpfr_add(value_hi.get(), xk_hi.get(), yk_hi.get(), MPFR_RNDU);

    Real dev_lo(prec), dev_hi(prec);
    if (k_sign == 0) {
      mpfr_set_zero(dev_lo.get(), 1);
      mpfr_set_zero(dev_hi.get(), 1);
    } else if (k_sign > 0) {
      mpfr_ui_sub(dev_lo.get(), 2, value_hi.get(), MPFR_RNDD);
      mpfr_ui_sub(dev_hi.get(), 2, value_lo.get(), MPFR_RNDU);
    } else {
      mpfr_sub_ui(dev_lo.get(), value_lo.get(), 2, MPFR_RNDD);
      mpfr_sub_ui(dev_hi.get(), value_hi.get(), 2, MPFR_RNDU);
    }

    if (mpfr_cmp_q(dev_hi.get(), epsilon.get_mpq_t()) < 0) continue;
    if (mpfr_cmp_q(dev_lo.get(), epsilon.get_mpq_t()) >= 0) {
      last_at_or_above = t->n;
      continue;
    }
    throw PrecisionError("deviation enclosure at n=" + std::to_string(t->n) +
                         " straddles epsilon at " +
                         std::to_string(precision_bits) +
                         " bits; raise the precision");
  }
  if (last_at_or_above == n_max)
    throw NoThresholdError(rational_label(k), n_max);

  EpsilonThreshold result;
  result.k_label = rational_label(k);
  result.epsilon = epsilon;
  result.n_max = n_max;
  result.threshold = last_at_or_above + 1;
  result.exact = false;
  result.precision_bits = precision_bits;
  result.caveat = kEpsilonTailCaveat;
  return result;
}

}  // namespace triprimes
