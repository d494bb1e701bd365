#include "triprimes/prime_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triprimes {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) r--;
  while ((r + 1) * (r + 1) <= n) r++;
  return r;
}

}  // namespace

PrimeStream::PrimeStream(const SieveConfig& config)
    : config_(config), segment_low_(3), base_limit_(1), pos_(0) {
  if (config_.segment_flags == 0)
    throw std::invalid_argument("segment_flags must be positive");
  flags_.resize(config_.segment_flags);
  out_.push_back(2);
}

void PrimeStream::extend_base(std::uint64_t need) {
  if (need <= base_limit_) return;
  std::uint64_t limit = std::max<std::uint64_t>(need, 2 * base_limit_);
  std::vector<std::uint8_t> mark(limit + 1, 1);
  for (std::uint64_t i = 3; i * i <= limit; i += 2)
    if (mark[i])
      for (std::uint64_t j = i * i; j <= limit; j += 2 * i) mark[j] = 0;
  base_.clear();
  for (std::uint64_t i = 3; i <= limit; i += 2)
    if (mark[i]) base_.push_back(i);
  base_limit_ = limit;
}

void PrimeStream::refill() {
  const std::size_t flags = flags_.size();
  for (;;) {
    const std::uint64_t low = segment_low_;
    const std::uint64_t last = low + 2 * (flags - 1);  // largest odd covered
    extend_base(isqrt(last));

    std::fill(flags_.begin(), flags_.end(), 1);
    for (std::uint64_t p : base_) {
      std::uint64_t start = p * p;
      if (start > last) break;  // base_ is ascending
      if (start < low) {
        start = ((low + p - 1) / p) * p;
        if (start % 2 == 0) start += p;
      }
      for (std::size_t i = (start - low) / 2; i < flags; i += p) flags_[i] = 0;
    }

    out_.clear();
    pos_ = 0;
    for (std::size_t i = 0; i < flags; i++)
      if (flags_[i]) out_.push_back(low + 2 * i);
    segment_low_ = low + 2 * flags;
    if (!out_.empty()) return;  // tiny segments can come up all-composite
  }
}

std::uint64_t PrimeStream::next() {
  if (pos_ == out_.size()) refill();
  return out_[pos_++];
}

TripleStream::TripleStream(std::uint64_t n_max, const SieveConfig& config)
    : primes_(config), n_max_(n_max), n_(0) {
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  a_ = primes_.next();
  b_ = primes_.next();
  c_ = primes_.next();
}

std::optional<PrimeTriple> TripleStream::next() {
  if (n_ == n_max_) return std::nullopt;
  PrimeTriple t{n_ + 1, a_, b_, c_};
  n_++;
  if (n_ < n_max_) {
    a_ = b_;
    b_ = c_;
    c_ = primes_.next();
  }
  return t;
}

namespace {

void check_streaming_budget(const SieveConfig& config) {
  if (config.segment_flags > config.memory_budget)
    throw ResourceLimitError(
        "segment of " + std::to_string(config.segment_flags) +
        " flags exceeds the memory budget of " +
        std::to_string(config.memory_budget) + " bytes; reduce segment_flags");
}

}  // namespace

std::vector<std::uint64_t> sieve_upto(std::uint64_t limit,
                                      const SieveConfig& config) {
  check_streaming_budget(config);
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  PrimeStream stream(config);
  const std::uint64_t budget = config.memory_budget - config.segment_flags;
  for (;;) {
    std::uint64_t p = stream.next();
    if (p > limit) break;
    if ((primes.size() + 1) * sizeof(std::uint64_t) > budget)
      throw ResourceLimitError(
          "prime list for limit " + std::to_string(limit) +
          " exceeds the memory budget of " + std::to_string(config.memory_budget) +
          " bytes; reduce the limit or raise the budget");
    primes.push_back(p);
  }
  return primes;
}

std::uint64_t nth_prime(std::uint64_t n, const SieveConfig& config) {
  if (n == 0) throw std::invalid_argument("prime index is 1-based");
  check_streaming_budget(config);
  PrimeStream stream(config);
  std::uint64_t p = 0;
  for (std::uint64_t i = 0; i < n; i++) p = stream.next();
  return p;
}

void for_each_triple(std::uint64_t n_max,
                     const std::function<void(const PrimeTriple&)>& fn,
                     const SieveConfig& config) {
  check_streaming_budget(config);
  TripleStream stream(n_max, config);
  while (auto t = stream.next()) fn(*t);
}

std::vector<PrimeTriple> triples(std::uint64_t n_max, const SieveConfig& config) {
  check_streaming_budget(config);
  std::vector<PrimeTriple> out;
  const std::uint64_t budget = config.memory_budget - config.segment_flags;
  TripleStream stream(n_max, config);
  while (auto t = stream.next()) {
    if ((out.size() + 1) * sizeof(PrimeTriple) > budget)
      throw ResourceLimitError("triple list for n_max " + std::to_string(n_max) +
                               " exceeds the memory budget; stream instead");
    out.push_back(*t);
  }
  return out;
}

}  // namespace triprimes
