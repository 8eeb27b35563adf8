#include "quadrature.hpp"

#include <cmath>
#include <numbers>

namespace zetakit::detail {

namespace {
constexpr int kMinLevel = 3;
}

TanhSinhRule::TanhSinhRule(long bits, int max_level) : bits_(bits), max_level_(max_level) {
  // Weights fall below 2^-bits once pi/2 sinh(t) exceeds about bits*ln2/2.
  double u = static_cast<double>(bits) * std::numbers::ln2 / 2 + 4;
  t_max_ = std::asinh(2 * u / std::numbers::pi);
}

const std::vector<TanhSinhRule::Node>& TanhSinhRule::level(int l) {
  while (static_cast<int>(levels_.size()) <= l) {
    int cur = static_cast<int>(levels_.size());
    PrecisionScope scope(bits_);
    std::vector<Node> nodes;
    Real h = pow2(-cur);
    Real half_pi = const_pi() / 2;
    long stride = cur == 0 ? 1 : 2;
    long start = cur == 0 ? 0 : 1;
    double hd = std::ldexp(1.0, -cur);
    for (long k = start; static_cast<double>(k) * hd <= t_max_; k += stride) {
      Real t = h * k;
      Real u = half_pi * sinh(t);
      Real cu = cosh(u);
      nodes.push_back({tanh(u), half_pi * cosh(t) / (cu * cu)});
    }
    levels_.push_back(std::move(nodes));
  }
  return levels_[static_cast<std::size_t>(l)];
}

QuadEstimate TanhSinhRule::integrate(const RealToComplex& f, const Real& a, const Real& b, const Real& tol) {
  PrecisionScope scope(bits_);
  QuadEstimate out;
  Real c = (a + b) / 2;
  Real r = (b - a) / 2;
  Complex raw;
  Complex prev;
  for (int l = 0; l <= max_level_; ++l) {
    for (const Node& n : level(l)) {
      if (n.x.is_zero()) {
        raw += f(c) * n.w;
        ++out.evaluations;
        continue;
      }
      Real dx = r * n.x;
      raw += (f(c + dx) + f(c - dx)) * n.w;
      out.evaluations += 2;
    }
    Complex cur = raw * (r * pow2(-l));
    if (l >= kMinLevel) {
      Real diff = abs(cur - prev);
      if (diff < tol) {
        out.value = cur;
        out.err = diff;
        out.converged = true;
        return out;
      }
    }
    prev = cur;
  }
  out.value = prev;
  out.err = tol;
  return out;
}

QuadEstimate exp_sinh(const RealToComplex& f, const Real& a, const Real& tol, long bits, int max_level) {
  PrecisionScope scope(bits);
  double b = static_cast<double>(bits) * std::numbers::ln2;
  double t_min = -std::asinh(2 * (b + 6) / std::numbers::pi);
  double t_max = std::asinh(2 * std::log(b + 60) / std::numbers::pi);
  Real half_pi = const_pi() / 2;
  QuadEstimate out;
  Complex raw;
  Complex prev;
  for (int l = 0; l <= max_level; ++l) {
    double hd = std::ldexp(1.0, -l);
    Real h = pow2(-l);
    long k_lo = static_cast<long>(std::ceil(t_min / hd));
    long k_hi = static_cast<long>(std::floor(t_max / hd));
    for (long k = k_lo; k <= k_hi; ++k) {
      if (l > 0 && k % 2 == 0) continue;
      Real t = h * k;
      Real eu = exp(half_pi * sinh(t));
      Real w = half_pi * cosh(t) * eu;
      raw += f(a + eu) * w;
      ++out.evaluations;
    }
    Complex cur = raw * h;
    if (l >= kMinLevel) {
      Real diff = abs(cur - prev);
      if (diff < tol) {
        out.value = cur;
        out.err = diff;
        out.converged = true;
        return out;
      }
    }
    prev = cur;
  }
  out.value = prev;
  out.err = tol;
  return out;
}

}  // namespace zetakit::detail
