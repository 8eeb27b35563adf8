#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "zetakit/complex.hpp"
#include "zetakit/precision.hpp"
#include "zetakit/reference.hpp"

namespace zetakit {

// Ascending coefficients; trailing zeros are trimmed so the leading
// coefficient is nonzero unless the polynomial is zero.
struct Polynomial {
  std::vector<Complex> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> c);

  std::size_t degree() const;  // 0 for the zero polynomial
  Complex operator()(const Complex& x) const;
};

// y C(m-y, m) sum_{k=0..m} (-1)^k C(m,k) f(x-k)/(y-k). m defaults to deg f.
// Exact (up to rounding) for deg f <= m. ForbiddenNodeError when y is within
// eps of 0..m.
Complex melzak_transform(const Polynomial& f, const Complex& x, const Complex& y, const PrecisionContext& ctx,
                         std::optional<std::size_t> m = std::nullopt);

// y C(m-y, m) = -prod_{j=0..m} (j-y) / m!
Complex melzak_prefactor(const Complex& y, std::size_t m);

// Taylor coefficient a_i of f at 0.
using TaylorCoefficients = std::function<Complex(std::size_t i)>;

// |y C(m-y,m) sum_k (-1)^k C(m,k) [f(-k) - f_m(-k)]/(y-k)| with f_m the degree-m
// truncation. The tails f(-k) - f_m(-k) are summed directly; ConvergenceError
// if they have not settled after max_terms coefficients.
Real admissibility_residual(const TaylorCoefficients& a, const Complex& y, std::size_t m, const PrecisionContext& ctx,
                            std::size_t max_terms = 20000);

// Both sides of
//   y C(m-y,m) sum_k C(2k,k) C(2m-2k,m-k)/(y-k) = 2^(2m)/m! prod_{j<m} (j + 1/2 - y).
std::pair<Complex, Complex> identity62(std::size_t m, const Complex& y, const PrecisionContext& ctx);

// Both sides of
//   pi/((m-1)/2)!^2 prod_{j<m} (j+5/2-s)
//     = sum_k 2^(-2m) pi/((m-1)/2)!^2 C(2k,k) C(2m-2k,m-k) prod_{j!=k} (j+2-s).
std::pair<Complex, Complex> identity63(std::size_t m, const Complex& s, const PrecisionContext& ctx);

// Both sides of
//   pi/sin(pi beta) prod_{j<m} (j+gamma+1-beta-s)
//     = sum_k (m-k-beta)!(k+beta-1)!/(k!(m-k)!) prod_{j!=k} (j+gamma-s).
// IntegerBetaError for integer beta; ForbiddenNodeError when s-gamma is in 0..m.
std::pair<Complex, Complex> identity64(std::size_t m, const Complex& beta, const Complex& gamma, const Complex& s,
                                       const PrecisionContext& ctx);

struct EpsilonVector {
  std::size_t m = 0;
  // eps_k = [(-1)^k eta(k+2) + g_k] / (k!(m-k)!), all positive.
  std::vector<Real> eps;
  // g_k/(k!(m-k)!) with g_k = (k-1/2)!(m-k-1/2)!/((m-1)/2)!^2.
  std::vector<Real> positive_part;
  // pi/((m-1)/2)!^2
  Real pi_weight;
};

// m >= 2 even.
EpsilonVector epsilon_coeffs(std::size_t m, const PrecisionContext& ctx);
// chi(m+1)/(m+1)! + pi/((m-1)/2)!^2, the closed form of sum eps_k.
Real epsilon_sum_closed_form(std::size_t m, const PrecisionContext& ctx);

// sum_k eps_k prod_{j!=k} (j+2-s) - pi/((m-1)/2)!^2 prod_{j<m} (j+5/2-s), m even.
EvalResult eta_via66(const Complex& s, std::size_t m, const PrecisionContext& ctx);

}  // namespace zetakit
