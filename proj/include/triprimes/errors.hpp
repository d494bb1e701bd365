#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "triprimes/numbers.hpp"

namespace triprimes {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A materialized result would exceed the configured memory budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Bad configuration input (gap-bound files, malformed parameters).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An interval comparison could not be resolved at the configured
// precision; the caller should retry with more bits.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// The gap bound 1/c cannot certify exponent k: the would-be leading
// coefficient of the certificate polynomial is not positive.
class WeakBoundError : public Error {
 public:
  WeakBoundError(std::uint64_t k, std::uint64_t c, BigInt leading);

  std::uint64_t k() const { return k_; }
  std::uint64_t c() const { return c_; }
  const BigInt& leading_coefficient() const { return leading_; }

 private:
  std::uint64_t k_;
  std::uint64_t c_;
  BigInt leading_;
};

// The scanned window ends on a failing index, so no threshold relative
// to that window exists.
class NoThresholdError : public Error {
 public:
  NoThresholdError(std::string k_label, std::uint64_t n_max);

  const std::string& k_label() const { return k_label_; }
  std::uint64_t n_max() const { return n_max_; }

 private:
  std::string k_label_;
  std::uint64_t n_max_;
};

}  // namespace triprimes
