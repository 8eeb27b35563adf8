#include "zetakit/primes.hpp"

#include <cmath>
#include <string>

#include "zetakit/errors.hpp"

namespace zetakit {

namespace {

__extension__ typedef unsigned __int128 u128;

std::vector<std::uint64_t> sieve(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

PrimeList::PrimeList(std::size_t count) {
  double n = static_cast<double>(count);
  std::uint64_t bound = count < 6 ? 15 : static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 1;
  primes_ = sieve(bound);
  primes_.resize(count);
}

PrimeList PrimeList::up_to(std::uint64_t bound) {
  PrimeList l;
  l.primes_ = sieve(bound);
  return l;
}

std::uint64_t PrimeList::p(std::size_t j) const {
  if (j < 1 || j > primes_.size()) throw DomainError("prime index out of range: " + std::to_string(j));
  return primes_[j - 1];
}

bool PrimeList::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace zetakit
