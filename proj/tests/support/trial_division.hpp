#pragma once

#include <cstdint>
#include <vector>

// Trial-division primality, used as the reference the sieve is judged
// against. Deliberately shares nothing with the library implementation.
namespace testsupport {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> trial_primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n <= limit; n++)
    if (is_prime_trial(n)) primes.push_back(n);
  return primes;
}

inline std::uint64_t trial_nth_prime(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t v = 2;; v++) {
    if (is_prime_trial(v) && ++count == n) return v;
  }
}

}  // namespace testsupport
