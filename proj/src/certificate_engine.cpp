#include "triprimes/certificate_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "triprimes/errors.hpp"

namespace triprimes {

const std::vector<GapBound>& builtin_gap_bounds() {
  static const std::vector<GapBound> bounds = {
      {"nagura", 5, 9, "Nagura 1952, Proc. Japan Acad. 28"},
      {"rohrbach-weis", 13, 118, "Rohrbach and Weis 1964, J. reine angew. Math. 214/215"},
  };
  return bounds;
}

namespace {

void validate_bound(const GapBound& bound) {
  if (bound.c < 2) throw ConfigError("gap bound needs c >= 2");
  if (bound.n0 < 1) throw ConfigError("gap bound needs n0 >= 1");
}

// Coefficient of p^i in c^{2k} * (p^k + (alpha p + 1)^k - (alpha^2 p +
// alpha + 1)^k) with alpha = (c+1)/c, already cleared of denominators:
//
//   [i == k] c^{2k} + C(k,i) (c+1)^i c^{2k-i}
//                   - C(k,i) (c+1)^{2i} (2c+1)^{k-i} c^{k-i}
BigInt scaled_coefficient(std::uint64_t k, std::uint64_t c, std::uint64_t i) {
  BigInt coeff = 0;
  if (i == k) coeff += pow_big(c, 2 * k);
  BigInt binom = binomial(k, i);
  coeff += binom * pow_big(c + 1, i) * pow_big(c, 2 * k - i);
  coeff -= binom * pow_big(c + 1, 2 * i) * pow_big(2 * c + 1, k - i) *
           pow_big(c, k - i);
  return coeff;
}

// Re-derives Q(p) by direct rational evaluation at one point and compares
// with the integer coefficients. Guards the closed form above.
void audit_certificate(const Certificate& cert, std::uint64_t p) {
  const Rational& alpha = cert.alpha;
  Rational point{BigInt(p)};
  Rational lin = alpha * point + 1;
  Rational quad = alpha * alpha * point + alpha + 1;
  Rational bracket = Rational(pow_big(p, cert.k)) + pow_rational(lin, cert.k) -
                     pow_rational(quad, cert.k);
  Rational scaled = bracket * Rational(cert.scale);
  scaled.canonicalize();
  if (!is_integral(scaled) ||
      scaled.get_num() != evaluate_certificate(cert, p))
    throw std::logic_error("certificate self-audit failed");
}

}  // namespace

Certificate derive_certificate(std::uint64_t k, const GapBound& bound) {
  if (k < 2) throw std::invalid_argument("certificate needs k >= 2");
  validate_bound(bound);
  const std::uint64_t c = bound.c;

  BigInt leading = scaled_coefficient(k, c, k);
  if (leading <= 0) throw WeakBoundError(k, c, leading);

  Certificate cert;
  cert.k = k;
  cert.c = c;
  cert.scale = pow_big(c, 2 * k);
  cert.alpha = Rational(c + 1, c);
  cert.alpha.canonicalize();
  cert.coeffs.reserve(k + 1);
  for (std::uint64_t i = 0; i <= k; i++)
    cert.coeffs.push_back(scaled_coefficient(k, c, i));

  audit_certificate(cert, 1);
  audit_certificate(cert, 10);
  audit_certificate(cert, 1000000);
  return cert;
}

BigInt evaluate_certificate(const Certificate& cert, const BigInt& p) {
  BigInt value = 0;
  for (auto it = cert.coeffs.rbegin(); it != cert.coeffs.rend(); ++it)
    value = value * p + *it;
  return value;
}

std::uint64_t positivity_threshold(const Certificate& cert) {
  const BigInt& lead = cert.coeffs.back();
  if (lead <= 0) throw std::logic_error("certificate leading coefficient not positive");

  BigInt max_abs = 0;
  for (std::size_t i = 0; i + 1 < cert.coeffs.size(); i++) {
    BigInt a = abs(cert.coeffs[i]);
    if (a > max_abs) max_abs = a;
  }
  // Cauchy bound: every real root lies strictly below 1 + max|a_i|/a_k,
  // so Q stays positive from there on and the scan below is exhaustive.
  BigInt ratio;
  mpz_cdiv_q(ratio.get_mpz_t(), max_abs.get_mpz_t(), lead.get_mpz_t());
  BigInt root_bound = 1 + ratio;
  if (!root_bound.fits_ulong_p())
    throw ResourceLimitError("positivity scan bound exceeds the machine word");
  std::uint64_t limit = root_bound.get_ui();

  std::uint64_t last_nonpositive = 0;
  for (std::uint64_t p = 1; p <= limit; p++) {
    if (evaluate_certificate(cert, p) <= 0) last_nonpositive = p;
  }
  return last_nonpositive + 1;
}

bool gap_bound_holds(std::uint64_t p_n, std::uint64_t p_n1, std::uint64_t c) {
  // c * (p_{n+1} - p_n - 1) < p_n, in 128 bits to dodge overflow
  uint128 gap = uint128(p_n1) - p_n - 1;
  return uint128(c) * gap < uint128(p_n);
}

bool gap_bound_holds_at(std::uint64_t n, std::uint64_t c,
                        const SieveConfig& config) {
  if (n == 0) throw std::invalid_argument("index must be >= 1");
  PrimeStream stream(config);
  std::uint64_t p = 0;
  for (std::uint64_t i = 0; i < n; i++) p = stream.next();
  return gap_bound_holds(p, stream.next(), c);
}

namespace {

std::uint64_t first_index_with_prime_at_least(std::uint64_t value,
                                              const SieveConfig& config) {
  PrimeStream stream(config);
  std::uint64_t n = 1;
  while (stream.next() < value) n++;
  return n;
}

}  // namespace

TheoremReport assemble_theorem(std::uint64_t k, const GapBound& bound,
                               std::uint64_t scan_budget,
                               const ScanConfig& config) {
  if (scan_budget < 1) throw std::invalid_argument("scan budget must be >= 1");

  TheoremReport report;
  report.k = k;
  report.bound = bound;
  report.certificate = derive_certificate(k, bound);
  report.positivity_m = positivity_threshold(report.certificate);

  std::uint64_t n_at_m =
      first_index_with_prime_at_least(report.positivity_m, config.sieve);
  report.analytic_from = std::max(bound.n0 + 1, n_at_m);

  // The analytic tail covers n >= analytic_from; the head scan has to
  // reach analytic_from - 1 to splice onto it.
  report.verified_to = std::min(scan_budget, report.analytic_from);
  report.status = report.verified_to + 1 >= report.analytic_from
                      ? AssemblyStatus::complete
                      : AssemblyStatus::head_gap;

  ScanSummary head = scan(k, 1, report.verified_to, config);
  for (const ScanException& e : head.exceptions)
    report.head_failures.push_back(e.n);
  report.n_min =
      report.head_failures.empty() ? 1 : report.head_failures.back() + 1;
  return report;
}

}  // namespace triprimes
