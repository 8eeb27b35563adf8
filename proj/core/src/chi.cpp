#include "zetakit/chi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zetakit/errors.hpp"
#include "zetakit/reduce.hpp"

namespace zetakit {

namespace {

// n/j^2 (1 - 1/j)^(n-1) at the current working precision.
void chi_term(mpfr_ptr out, unsigned long n, unsigned long j) {
  mpfr_set_ui(out, j - 1, MPFR_RNDN);
  mpfr_div_ui(out, out, j, MPFR_RNDN);
  mpfr_pow_ui(out, out, n - 1, MPFR_RNDN);
  mpfr_mul_ui(out, out, n, MPFR_RNDN);
  mpfr_div_ui(out, out, j, MPFR_RNDN);
  mpfr_div_ui(out, out, j, MPFR_RNDN);
}

}  // namespace

long chi_working_bits(unsigned long n, const PrecisionContext& ctx) {
  double decay = std::sqrt(2 * std::numbers::pi * static_cast<double>(n)) / std::numbers::ln2;
  return ctx.working_bits() + static_cast<long>(std::ceil(decay)) +
         static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 1))) + 8;
}

std::size_t chi_cutoff(unsigned long n, long working_bits) {
  return std::max<std::size_t>({64, 4 * static_cast<std::size_t>(n), 4 * static_cast<std::size_t>(working_bits)});
}

ChiValue chi_value(unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("chi requires n >= 1");
  const long w = chi_working_bits(n, ctx);
  const std::size_t J = chi_cutoff(n, w);

  ChiValue out;
  out.j_cutoff = J;
  Real value;
  Real bound;
  {
    PrecisionScope scope(w);
    Complex head = blocked_sum(
        2, J + 1,
        [n](std::size_t lo, std::size_t hi) {
          Real acc;
          Real t;
          for (std::size_t j = lo; j < hi; ++j) {
            chi_term(t.get(), n, j);
            if (j % 2 == 1)
              acc += t;
            else
              acc -= t;
          }
          return Complex(acc);
        },
        w);

    // Tail sum_{j>J} (-1)^(j-1) g(j) = (-1)^J sum_i (-1)^i a_i with a_i = g(J+1+i),
    // summed by the Euler transform sum_k (-1)^k (Delta^k a)_0 / 2^(k+1).
    Real a0;
    chi_term(a0.get(), n, J + 1);
    const Real target = ldexp(abs(a0), -w);
    Real tail;
    Real last_term;
    bool done = false;
    for (std::size_t K = 64; K <= 8192 && !done; K *= 2) {
      std::vector<Real> diff(K + 1);
      for (std::size_t i = 0; i <= K; ++i) chi_term(diff[i].get(), n, J + 1 + i);
      tail = Real(0);
      int small_run = 0;
      for (std::size_t k = 0; k <= K; ++k) {
        if (k > 0)
          for (std::size_t i = 0; i + k <= K; ++i) mpfr_sub(diff[i].get(), diff[i + 1].get(), diff[i].get(), MPFR_RNDN);
        Real term = ldexp(diff[0], -static_cast<long>(k) - 1);
        if (k % 2 == 1) term = -term;
        tail += term;
        last_term = abs(term);
        small_run = last_term < target ? small_run + 1 : 0;
        if (small_run >= 3) {
          done = true;
          break;
        }
      }
    }
    if (!done) throw PrecisionError("chi tail transform did not converge for n = " + std::to_string(n));
    if (J % 2 == 1) tail = -tail;

    value = head.re + tail;
    Real g_max(0.25);
    bound = last_term * 4 + ldexp(g_max, -w) * Real(static_cast<unsigned long>(J + 8192));
  }
  WorkingScope scope(ctx);
  out.value = value + Real(0);
  out.tail_bound = bound + Real(0);
  return out;
}

Real chi(unsigned long n, const PrecisionContext& ctx) { return chi_value(n, ctx).value; }

ChiTable::ChiTable(unsigned long n_max, const PrecisionContext& ctx) : ctx_(ctx) {
  entries_.reserve(n_max);
  for (unsigned long n = 1; n <= n_max; ++n) entries_.push_back(chi_value(n, ctx));
}

const ChiValue& ChiTable::at(unsigned long n) const {
  if (n < 1 || n > entries_.size()) throw DomainError("chi table index out of range: " + std::to_string(n));
  return entries_[n - 1];
}

Real ChiTable::decay_constant() const {
  WorkingScope scope(ctx_);
  Real c;
  for (unsigned long n = 64; n <= n_max(); ++n) c = max(c, abs(value(n)) * Real(n));
  return c;
}

}  // namespace zetakit
