#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "zetakit/complex.hpp"

namespace zetakit::detail {

struct QuadEstimate {
  Complex value;
  Real err;
  std::size_t evaluations = 0;
  bool converged = false;
};

using RealToComplex = std::function<Complex(const Real&)>;

// Tanh-sinh abscissae on [-1, 1], refined by halving the step. Nodes of each
// level are built once and reused across intervals.
class TanhSinhRule {
 public:
  TanhSinhRule(long bits, int max_level);
  // Integrates f over [a, b]; stops when successive levels differ by < tol.
  QuadEstimate integrate(const RealToComplex& f, const Real& a, const Real& b, const Real& tol);

 private:
  struct Node {
    Real x;  // in (-1, 1)
    Real w;  // includes the dx/dt factor
  };
  const std::vector<Node>& level(int l);

  long bits_;
  int max_level_;
  double t_max_;
  std::vector<std::vector<Node>> levels_;
};

// Exp-sinh quadrature on [a, inf) for integrands decaying like e^{-x}.
QuadEstimate exp_sinh(const RealToComplex& f, const Real& a, const Real& tol, long bits, int max_level);

}  // namespace zetakit::detail
