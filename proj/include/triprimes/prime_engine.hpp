#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "triprimes/errors.hpp"

namespace triprimes {

struct SieveConfig {
  // Flags per segment; one flag covers one odd number, so a segment
  // spans 2*segment_flags integers.
  std::size_t segment_flags = std::size_t{1} << 18;
  // Budget in bytes for materialized results (prime lists, triple
  // vectors). Streaming never exceeds the segment itself.
  std::uint64_t memory_budget = std::uint64_t{2} << 30;
};

// One index n with its three consecutive primes, 1-based with p_1 = 2.
struct PrimeTriple {
  std::uint64_t n;
  std::uint64_t p;    // p_n
  std::uint64_t p1;   // p_{n+1}
  std::uint64_t p2;   // p_{n+2}

  friend bool operator==(const PrimeTriple&, const PrimeTriple&) = default;
};

// Ascending primes via a segmented sieve. Memory stays proportional to
// the segment size, never to how far the stream has advanced.
class PrimeStream {
 public:
  explicit PrimeStream(const SieveConfig& config = {});

  std::uint64_t next();

 private:
  void refill();
  void extend_base(std::uint64_t need);

  SieveConfig config_;
  std::uint64_t segment_low_;
  std::vector<std::uint8_t> flags_;
  std::vector<std::uint64_t> base_;   // odd base primes
  std::uint64_t base_limit_;
  std::vector<std::uint64_t> out_;
  std::size_t pos_;
};

// Streams PrimeTriple for n = 1 .. n_max in index order.
class TripleStream {
 public:
  TripleStream(std::uint64_t n_max, const SieveConfig& config = {});

  std::optional<PrimeTriple> next();

 private:
  PrimeStream primes_;
  std::uint64_t n_max_;
  std::uint64_t n_;
  std::uint64_t a_, b_, c_;
};

// All primes <= limit, strictly increasing.
std::vector<std::uint64_t> sieve_upto(std::uint64_t limit,
                                      const SieveConfig& config = {});

// The n-th prime, 1-based (nth_prime(1) == 2).
std::uint64_t nth_prime(std::uint64_t n, const SieveConfig& config = {});

void for_each_triple(std::uint64_t n_max,
                     const std::function<void(const PrimeTriple&)>& fn,
                     const SieveConfig& config = {});

std::vector<PrimeTriple> triples(std::uint64_t n_max,
                                 const SieveConfig& config = {});

}  // namespace triprimes
