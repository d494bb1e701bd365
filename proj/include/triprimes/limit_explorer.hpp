#pragma once

#include <cstdint>
#include <string>

#include "triprimes/inequality_scanner.hpp"
#include "triprimes/numbers.hpp"
#include "triprimes/prime_engine.hpp"

namespace triprimes {

// a_n^k = (p_{n+1}/p_{n+2})^k + (p_n/p_{n+2})^k, exact for integer k.
// Strictly below 2 for k > 0, above 2 for k < 0, identically 2 at k = 0.
struct LimitSample {
  std::uint64_t n;
  std::int64_t k;
  Rational value;
  Rational deviation;  // |value - 2|

  friend bool operator==(const LimitSample&, const LimitSample&) = default;
};

LimitSample a_value(const PrimeTriple& t, std::int64_t k);
LimitSample a_value(std::uint64_t n, std::int64_t k,
                    const SieveConfig& config = {});

// Exact upper bound 2*(1 - (p_n/p_{n+2})^k) on the deviation, k >= 1.
Rational deviation_bound(const PrimeTriple& t, std::int64_t k);
Rational deviation_bound(std::uint64_t n, std::int64_t k,
                         const SieveConfig& config = {});

// Fixed caveat attached to every threshold report: the tail beyond the
// scanned window is not and cannot be verified by a finite scan.
extern const char* const kEpsilonTailCaveat;

struct EpsilonThreshold {
  std::string k_label;  // exponent as given ("2", "-1", "0.5")
  Rational epsilon;
  std::uint64_t n_max;
  // Minimal N with deviation < epsilon for every n in [N, n_max].
  std::uint64_t threshold;
  bool exact;                // true for integer exponents
  unsigned precision_bits;   // 0 on the exact path
  std::string caveat;

  friend bool operator==(const EpsilonThreshold&, const EpsilonThreshold&) = default;
};

// Exact integer-exponent scan; comparisons are cross-multiplied
// integers, so boundary cases cannot flip on rounding. Throws
// NoThresholdError when the deviation at n_max itself is >= epsilon.
EpsilonThreshold epsilon_threshold(std::int64_t k, const Rational& epsilon,
                                   std::uint64_t n_max,
                                   const ScanConfig& config = {});

// a_n^k for non-integer exponents: certified enclosure at the given
// precision, bounds rounded outward.
struct RealLimitSample {
  std::uint64_t n;
  std::string k_label;
  unsigned precision_bits;
  std::string value_lo;
  std::string value_hi;
  std::string deviation_lo;
  std::string deviation_hi;

  friend bool operator==(const RealLimitSample&, const RealLimitSample&) = default;
};

RealLimitSample a_value_real(const PrimeTriple& t, const Rational& k,
                             unsigned precision_bits);
RealLimitSample a_value_real(std::uint64_t n, const Rational& k,
                             unsigned precision_bits,
                             const SieveConfig& config = {});

// Interval-based scan for real exponents. A deviation enclosure that
// straddles epsilon raises PrecisionError instead of guessing.
EpsilonThreshold epsilon_threshold_real(const Rational& k,
                                        const Rational& epsilon,
                                        std::uint64_t n_max,
                                        unsigned precision_bits,
                                        const ScanConfig& config = {});

}  // namespace triprimes
