#pragma once

#include "zetakit/complex.hpp"
#include "zetakit/precision.hpp"

namespace zetakit {

// Gamma function by Spouge's approximation with a precision-dependent
// parameter, reflection for Re(z) < 1/2. Throws PoleError at non-positive
// integers (and within eps of them).
Complex gamma(const Complex& z, const PrecisionContext& ctx);
Real gamma(const Real& x, const PrecisionContext& ctx);

// A branch of log Gamma(z). Only exp() of differences is meaningful; the
// imaginary part is not normalised to the principal branch.
Complex lgamma(const Complex& z, const PrecisionContext& ctx);

// Spouge parameter used for a given target precision.
long spouge_parameter(long bits);

}  // namespace zetakit
