#pragma once

#include "zetakit/real.hpp"

namespace zetakit {

class PrecisionContext {
 public:
  static constexpr long kDefaultBits = 256;
  static constexpr long kDefaultGuardBits = 32;

  explicit PrecisionContext(long bits = kDefaultBits, long guard_bits = kDefaultGuardBits);

  long bits() const noexcept { return bits_; }
  long guard_bits() const noexcept { return guard_bits_; }
  long working_bits() const noexcept { return bits_ + guard_bits_; }

  // 2^(1-bits), exact.
  Real eps() const;
  // sqrt(eps), used as the exclusion radius around poles and prefactor zeros.
  Real sqrt_eps() const;

  PrecisionContext with_bits(long bits) const { return PrecisionContext(bits, guard_bits_); }
  PrecisionContext raised(long extra_bits) const { return PrecisionContext(bits_ + extra_bits, guard_bits_); }

 private:
  long bits_;
  long guard_bits_;
};

// Enters ctx.working_bits() (+ extra) on the calling thread.
class WorkingScope : public PrecisionScope {
 public:
  explicit WorkingScope(const PrecisionContext& ctx, long extra = 0)
      : PrecisionScope(ctx.working_bits() + extra) {}
};

// Rounds x to the context's working precision.
Real rounded(const Real& x, const PrecisionContext& ctx);

}  // namespace zetakit
