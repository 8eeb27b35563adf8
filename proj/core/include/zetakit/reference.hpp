#pragma once

#include <cstddef>
#include <string>

#include "zetakit/complex.hpp"
#include "zetakit/precision.hpp"

namespace zetakit {

struct EvalResult {
  Complex value;
  std::size_t terms_used = 0;
  Real err_estimate;
  std::string scheme_id;
  long bits = 0;
};

// Dirichlet eta by binomial-weighted acceleration of the alternating series.
EvalResult eta_ref(const Complex& s, const PrecisionContext& ctx);

// zeta(s) = eta(s) / (1 - 2^(1-s)).
EvalResult zeta_ref(const Complex& s, const PrecisionContext& ctx);

// zeta(s) from the integral of x^(s-1)/(e^x+1) over (0, inf), divided by
// (1 - 2^(1-s)) Gamma(s).
EvalResult zeta_quad_oracle(const Complex& s, const PrecisionContext& ctx);

// |zeta(1-s) - 2^(1-s) pi^(-s) cos(pi s/2) Gamma(s) zeta(s)| for 0 < Re(s) < 1.
Real functional_eq_residual(const Complex& s, const PrecisionContext& ctx);

// kappa(s) with eta(s) + eta(1-s) = kappa(s) zeta(s), for 0 < Re(s) < 1.
Complex kappa_prefactor(const Complex& s, const PrecisionContext& ctx);

// 1 - 2^(1-s), checked against the pole at s = 1 and the zeros at
// s = 1 + 2 pi i n / ln 2 (radius sqrt(eps)).
Complex eta_zeta_denominator(const Complex& s, const PrecisionContext& ctx);

// Converts an eta result to zeta through the factor above.
EvalResult eta_to_zeta(const EvalResult& eta, const Complex& s, const PrecisionContext& ctx);

}  // namespace zetakit
