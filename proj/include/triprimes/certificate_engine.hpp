#pragma once

#include <cstdint>
#include <vector>

#include "triprimes/inequality_scanner.hpp"
#include "triprimes/numbers.hpp"
#include "triprimes/prime_engine.hpp"

namespace triprimes {

// A declared prime-gap premise: p_{m+1} - p_m - 1 < p_m / c for all
// m > n0. Premises are taken on faith (with their provenance recorded);
// conclusions built on them are conditional.
struct GapBound {
  std::string name;
  std::uint64_t c;   // denominator, >= 2
  std::uint64_t n0;  // asserted for indices beyond this one, >= 1
  std::string provenance;

  friend bool operator==(const GapBound&, const GapBound&) = default;
};

// The two bounds shipped with the tool: Nagura (c=5, n0=9) and
// Rohrbach-Weis (c=13, n0=118).
const std::vector<GapBound>& builtin_gap_bounds();

// Integer-coefficient polynomial Q with
//
//   p_{n+1}^k + p_n^k - p_{n+2}^k > Q(p_n) / c^{2k}
//
// for every n where the gap bound holds at steps n and n+1. Derived by
// substituting p_{n+2} < alpha*p_{n+1} + 1 and p_{n+1} < alpha*p_n + 1
// (alpha = (c+1)/c) and expanding
//
//   p^k + (alpha*p + 1)^k - (alpha^2*p + alpha + 1)^k
//
// with exact rational binomial coefficients; the c^{2k} scaling clears
// every denominator. Positivity of Q then settles the tail.
struct Certificate {
  std::uint64_t k;
  std::uint64_t c;
  std::vector<BigInt> coeffs;  // ascending degree 0..k, leading > 0
  BigInt scale;                // c^{2k}
  Rational alpha;              // (c+1)/c, kept for audit

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Throws WeakBoundError when the leading coefficient
// c^{2k}*(1 + alpha^k - alpha^{2k}) is not positive, i.e. the premise
// cannot certify exponent k. Requires k >= 2.
Certificate derive_certificate(std::uint64_t k, const GapBound& bound);

BigInt evaluate_certificate(const Certificate& cert, const BigInt& p);

// Smallest integer M >= 1 with Q(p) > 0 for every integer p >= M.
// Scans up to a Cauchy root bound, beyond which positivity is automatic.
std::uint64_t positivity_threshold(const Certificate& cert);

// Exact integer check of c*(p_{n+1} - p_n - 1) < p_n.
bool gap_bound_holds(std::uint64_t p_n, std::uint64_t p_n1, std::uint64_t c);
bool gap_bound_holds_at(std::uint64_t n, std::uint64_t c,
                        const SieveConfig& config = {});

enum class AssemblyStatus { complete, head_gap };

// A complete conditional theorem: analytic tail from the certificate
// plus an exhaustively verified head.
struct TheoremReport {
  std::uint64_t k;
  GapBound bound;
  Certificate certificate;
  std::uint64_t positivity_m;
  // First index covered by the analytic argument: n > n0 and
  // p_n >= positivity_m both hold from here on.
  std::uint64_t analytic_from;
  std::uint64_t verified_to;  // head scanned exhaustively over [1, verified_to]
  std::vector<std::uint64_t> head_failures;
  // Minimal index with the strict inequality holding from there through
  // the head and analytically beyond, conditional on the bound.
  std::uint64_t n_min;
  AssemblyStatus status;  // head_gap when the scan budget stops short

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

TheoremReport assemble_theorem(std::uint64_t k, const GapBound& bound,
                               std::uint64_t scan_budget,
                               const ScanConfig& config = {});

}  // namespace triprimes
