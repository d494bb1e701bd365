#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Minimal nonnegative bignum in base 1e9, independent of the gmp-backed
// arithmetic in the library. Slow on purpose; only test-sized inputs.
namespace testsupport {

class NaiveBigint {
 public:
  NaiveBigint() = default;

  static NaiveBigint from_u64(std::uint64_t v) {
    NaiveBigint r;
    while (v) {
      r.limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    }
    return r;
  }

  NaiveBigint plus(const NaiveBigint& other) const {
    NaiveBigint r;
    std::uint64_t carry = 0;
    std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    for (std::size_t i = 0; i < n || carry; i++) {
      std::uint64_t sum = carry;
      if (i < limbs_.size()) sum += limbs_[i];
      if (i < other.limbs_.size()) sum += other.limbs_[i];
      r.limbs_.push_back(static_cast<std::uint32_t>(sum % kBase));
      carry = sum / kBase;
    }
    return r;
  }

  NaiveBigint times(const NaiveBigint& other) const {
    if (limbs_.empty() || other.limbs_.empty()) return NaiveBigint();
    std::vector<std::uint64_t> acc(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); i++) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < other.limbs_.size(); j++) {
        std::uint64_t cur = acc[i + j] +
                            std::uint64_t(limbs_[i]) * other.limbs_[j] + carry;
        acc[i + j] = cur % kBase;
        carry = cur / kBase;
      }
      for (std::size_t j = i + other.limbs_.size(); carry; j++) {
        std::uint64_t cur = acc[j] + carry;
        acc[j] = cur % kBase;
        carry = cur / kBase;
      }
    }
    NaiveBigint r;
    for (std::uint64_t limb : acc) r.limbs_.push_back(std::uint32_t(limb));
    r.trim();
    return r;
  }

  NaiveBigint pow(std::uint64_t exp) const {
    NaiveBigint r = from_u64(1);
    for (std::uint64_t i = 0; i < exp; i++) r = r.times(*this);
    return r;
  }

  // -1, 0, 1
  int compare(const NaiveBigint& other) const {
    if (limbs_.size() != other.limbs_.size())
      return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != other.limbs_[i])
        return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  std::string str() const {
    if (limbs_.empty()) return "0";
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;  // base 1e9, little endian, no leading 0
};

}  // namespace testsupport
