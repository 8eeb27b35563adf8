#include "zetakit/reduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace zetakit {

unsigned default_threads() {
  if (const char* env = std::getenv("ZETAKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Complex blocked_sum(std::size_t first, std::size_t last, const BlockSum& block, long bits, unsigned threads) {
  PrecisionScope scope(bits);
  if (last <= first) return Complex();
  const std::size_t n_blocks = (last - first + kReductionBlock - 1) / kReductionBlock;
  std::vector<Complex> partial(n_blocks);

  auto run = [&](std::size_t b) {
    std::size_t lo = first + b * kReductionBlock;
    std::size_t hi = std::min(last, lo + kReductionBlock);
    partial[b] = block(lo, hi);
  };

  if (threads == 0) threads = default_threads();
  const std::size_t workers = std::min<std::size_t>(threads, n_blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) run(b);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          PrecisionScope inner(bits);
          for (std::size_t b = w; b < n_blocks; b += workers) run(b);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  Complex total;
  for (const Complex& p : partial) total += p;
  return total;
}

}  // namespace zetakit
