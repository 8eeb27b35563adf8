#pragma once

#include <cstddef>
#include <functional>

#include "zetakit/complex.hpp"

namespace zetakit {

inline constexpr std::size_t kReductionBlock = 4096;

// Sums block(first, last) over [first, last) split into fixed blocks of
// kReductionBlock indices. Blocks may run on several threads; their partial
// sums are combined sequentially in block order, so the result is
// bit-identical for any thread count. Each worker runs at `bits` precision.
using BlockSum = std::function<Complex(std::size_t first, std::size_t last)>;

Complex blocked_sum(std::size_t first, std::size_t last, const BlockSum& block, long bits,
                    unsigned threads = 0);

// Worker count used when `threads` is 0: ZETAKIT_THREADS if set, else the
// hardware concurrency.
unsigned default_threads();

}  // namespace zetakit
