#include "triprimes/errors.hpp"

namespace triprimes {

WeakBoundError::WeakBoundError(std::uint64_t k, std::uint64_t c, BigInt leading)
    : Error("gap bound 1/" + std::to_string(c) + " is too weak for exponent " +
            std::to_string(k) + ": leading coefficient " + leading.get_str() +
            " is not positive"),
      k_(k),
      c_(c),
      leading_(std::move(leading)) {}

NoThresholdError::NoThresholdError(std::string k_label, std::uint64_t n_max)
    : Error("no threshold within window: the condition still fails at n_max = " +
            std::to_string(n_max) + " (k = " + k_label + ")"),
      k_label_(std::move(k_label)),
      n_max_(n_max) {}

}  // namespace triprimes
