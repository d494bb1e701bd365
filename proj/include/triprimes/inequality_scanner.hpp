#pragma once

#include <cstdint>
#include <vector>

#include "triprimes/numbers.hpp"
#include "triprimes/prime_engine.hpp"

namespace triprimes {

enum class Relation { lhs_greater, equal, rhs_greater };

const char* relation_name(Relation r);

// Exact comparison of p_{n+1}^k + p_n^k (lhs) against p_{n+2}^k (rhs).
struct TripleVerdict {
  std::uint64_t n;
  std::uint64_t k;
  BigInt lhs;
  BigInt rhs;
  Relation relation;

  friend bool operator==(const TripleVerdict&, const TripleVerdict&) = default;
};

struct ScanConfig {
  SieveConfig sieve;
  unsigned workers = 1;
  std::size_t chunk_size = 8192;
};

TripleVerdict check_triple(const PrimeTriple& t, std::uint64_t k);

// Same relation as check_triple without materializing the powers;
// stays exact (128-bit fast path, big integers beyond it).
Relation classify_triple(const PrimeTriple& t, std::uint64_t k);

struct ScanException {
  std::uint64_t n;
  Relation relation;  // never lhs_greater

  friend bool operator==(const ScanException&, const ScanException&) = default;
};

struct ScanSummary {
  std::uint64_t k;
  std::uint64_t n_from;
  std::uint64_t n_to;
  std::uint64_t lhs_greater_count;
  std::uint64_t equal_count;
  std::uint64_t rhs_greater_count;
  std::vector<ScanException> exceptions;  // ascending by n

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

// Exhaustive exact scan over n in [n_from, n_to]. Results do not
// depend on worker count or chunk size.
ScanSummary scan(std::uint64_t k, std::uint64_t n_from, std::uint64_t n_to,
                 const ScanConfig& config = {});

// Combines summaries of adjacent ranges (b must start at a.n_to + 1).
ScanSummary merge_summaries(const ScanSummary& a, const ScanSummary& b);

struct ThresholdResult {
  std::uint64_t k;
  std::uint64_t n_max;
  // Minimal N such that the strict inequality holds for every n in
  // [N, n_max]. The tail beyond n_max is not checked here; certificates
  // cover it when a gap bound applies.
  std::uint64_t threshold;
  std::vector<std::uint64_t> failures;  // every n < threshold that fails

  friend bool operator==(const ThresholdResult&, const ThresholdResult&) = default;
};

// Throws NoThresholdError when the strict inequality fails at n_max itself.
ThresholdResult find_threshold(std::uint64_t k, std::uint64_t n_max,
                               const ScanConfig& config = {});

// Built-in checks:
//   1: p_{n+2} <= p_{n+1} + p_n        for all n      (non-strict)
//   2: p_{n+2}^2 < p_{n+1}^2 + p_n^2   for n >= 4
//   3: p_{n+2}^3 < p_{n+1}^3 + p_n^3   for n >= 9
struct TheoremCheck {
  int theorem_id;
  std::uint64_t k;
  std::uint64_t claimed_from;
  std::uint64_t n_max;
  bool passed;
  std::vector<std::uint64_t> violations;
  std::vector<std::uint64_t> equalities;

  friend bool operator==(const TheoremCheck&, const TheoremCheck&) = default;
};

TheoremCheck verify_theorem(int theorem_id, std::uint64_t n_max,
                            const ScanConfig& config = {});

}  // namespace triprimes
