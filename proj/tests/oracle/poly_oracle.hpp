#pragma once

// Test-side polynomial oracle: coefficient expansion plus Durand-Kerner.
// Deliberately shares nothing with the library's phase-function solvers.

#include <cstddef>
#include <vector>

#include "zetakit/complex.hpp"

namespace oracle {

using zetakit::Complex;
using zetakit::Real;

// Ascending coefficients.
using Poly = std::vector<Complex>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly add(Poly a, const Poly& b, const Real& scale = Real(1)) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  return a;
}

// prod_j (a_j - 1 + s) + prod_j (a_j - s), skipping index `skip` when given.
inline Poly symmetrized(const std::vector<Real>& nodes, std::size_t skip = static_cast<std::size_t>(-1)) {
  Poly p{Complex(1)}, q{Complex(1)};
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == skip) continue;
    p = mul(p, Poly{Complex(nodes[j] - 1), Complex(1)});
    q = mul(q, Poly{Complex(nodes[j]), Complex(-1)});
  }
  return add(p, q);
}

inline Poly trim(Poly p, const Real& tol) {
  Real scale;
  for (const Complex& c : p) scale = max(scale, abs(c));
  while (p.size() > 1 && abs(p.back()) <= tol * scale) p.pop_back();
  return p;
}

inline Complex eval(const Poly& p, const Complex& x) {
  Complex acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// All roots of p (degree >= 1) by Durand-Kerner at the current precision.
inline std::vector<Complex> roots(const Poly& p, int max_iter = 4000) {
  const std::size_t n = p.size() - 1;
  const Complex lead = p.back();
  Real radius;
  for (std::size_t i = 0; i < n; ++i) radius = max(radius, abs(p[i] / lead));
  radius += 1;
  std::vector<Complex> z(n);
  Complex seed(Real(0.4), Real(0.9)), w(1);
  for (std::size_t i = 0; i < n; ++i) {
    w *= seed;
    z[i] = w * radius;
  }
  const Real tol = zetakit::pow2(20 - zetakit::working_precision());
  for (int it = 0; it < max_iter; ++it) {
    Real worst;
    for (std::size_t i = 0; i < n; ++i) {
      Complex den = lead;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      Complex d = eval(p, z[i]) / den;
      z[i] -= d;
      worst = max(worst, abs(d));
    }
    if (worst < tol) break;
  }
  return z;
}

}  // namespace oracle
