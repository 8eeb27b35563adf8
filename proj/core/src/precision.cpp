#include "zetakit/precision.hpp"

#include "zetakit/errors.hpp"

namespace zetakit {

PrecisionContext::PrecisionContext(long bits, long guard_bits) : bits_(bits), guard_bits_(guard_bits) {
  if (bits < 64) throw PrecisionError("precision must be at least 64 bits");
  if (guard_bits < 0) throw PrecisionError("guard bits must be non-negative");
}

Real PrecisionContext::eps() const {
  PrecisionScope scope(working_bits());
  return pow2(1 - bits_);
}

Real PrecisionContext::sqrt_eps() const {
  PrecisionScope scope(working_bits());
  return sqrt(pow2(1 - bits_));
}

Real rounded(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working_bits());
  return x + Real(0);
}

}  // namespace zetakit
