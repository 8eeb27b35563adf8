#pragma once

#include <cstddef>
#include <vector>

#include "zetakit/precision.hpp"
#include "zetakit/real.hpp"

namespace zetakit {

// chi(n) = sum_{j>=2} (-1)^(j-1) n/j^2 (1 - 1/j)^(n-1).
struct ChiValue {
  Real value;
  Real tail_bound;  // bound on |value - chi(n)|, truncation plus rounding
  std::size_t j_cutoff = 0;
};

// Direct alternating sum to j_cutoff, then an Euler-transform tail. The
// working precision is raised by about sqrt(2 pi n)/ln 2 bits because chi(n)
// is exponentially smaller than the partial sums it emerges from.
ChiValue chi_value(unsigned long n, const PrecisionContext& ctx);
Real chi(unsigned long n, const PrecisionContext& ctx);

std::size_t chi_cutoff(unsigned long n, long working_bits);
// Precision used internally for chi(n).
long chi_working_bits(unsigned long n, const PrecisionContext& ctx);

// Build-once table of chi(1..n_max); read-only after construction, so it can
// be shared between threads.
class ChiTable {
 public:
  ChiTable(unsigned long n_max, const PrecisionContext& ctx);

  unsigned long n_max() const noexcept { return static_cast<unsigned long>(entries_.size()); }
  const PrecisionContext& context() const noexcept { return ctx_; }
  const Real& value(unsigned long n) const { return at(n).value; }
  const Real& tail_bound(unsigned long n) const { return at(n).tail_bound; }
  std::size_t j_cutoff(unsigned long n) const { return at(n).j_cutoff; }

  // max_{64 <= n <= n_max} n |chi(n)|, the constant in |chi(n)| <= C/n.
  Real decay_constant() const;

 private:
  const ChiValue& at(unsigned long n) const;

  PrecisionContext ctx_;
  std::vector<ChiValue> entries_;
};

}  // namespace zetakit
