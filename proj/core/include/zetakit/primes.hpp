#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zetakit {

// Ascending primes 2, 3, 5, ... with no gaps. Read-only after construction.
class PrimeList {
 public:
  // The first `count` primes.
  explicit PrimeList(std::size_t count);
  // All primes <= bound.
  static PrimeList up_to(std::uint64_t bound);

  std::size_t size() const noexcept { return primes_.size(); }
  // 1-based: p(1) = 2.
  std::uint64_t p(std::size_t j) const;
  const std::vector<std::uint64_t>& values() const noexcept { return primes_; }

  // Deterministic Miller-Rabin for 64-bit integers.
  static bool is_prime(std::uint64_t n);

 private:
  PrimeList() = default;
  std::vector<std::uint64_t> primes_;
};

}  // namespace zetakit
