#include "zetakit/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "zetakit/errors.hpp"

namespace zetakit {

namespace {

struct SpougeTable {
  long a = 0;
  long prec = 0;
  std::vector<Real> c;  // c[0] = sqrt(2 pi), c[k] for k = 1..a-1
};

const SpougeTable& spouge_table(long target_bits) {
  thread_local std::map<long, SpougeTable> cache;
  auto it = cache.find(target_bits);
  if (it != cache.end()) return it->second;
  if (cache.size() > 16) cache.clear();

  SpougeTable t;
  t.a = spouge_parameter(target_bits);
  double max_log2 = 0;
  for (long k = 1; k < t.a; ++k) {
    double ak = static_cast<double>(t.a - k);
    double l = (k - 0.5) * std::log(ak) + ak - std::lgamma(static_cast<double>(k));
    max_log2 = std::max(max_log2, l / std::numbers::ln2);
  }
  t.prec = target_bits + static_cast<long>(std::ceil(max_log2)) + 16;

  PrecisionScope scope(t.prec);
  t.c.reserve(static_cast<std::size_t>(t.a));
  t.c.push_back(sqrt(2 * const_pi()));
  Real fact(1);  // (k-1)!
  for (long k = 1; k < t.a; ++k) {
    if (k > 1) fact *= (k - 1);
    Real ak(t.a - k);
    Real ck = pow(ak, Real(k) - Real(0.5)) * exp(ak) / fact;
    if (k % 2 == 0) ck = -ck;
    t.c.push_back(std::move(ck));
  }
  return cache.emplace(target_bits, std::move(t)).first->second;
}

// Returns the pieces of Gamma(w + 1) = exp(L) * S with L = (w+1/2)log(w+a) - (w+a).
void spouge_pieces(const Complex& w, long target_bits, Complex& L, Complex& S) {
  const SpougeTable& t = spouge_table(target_bits);
  PrecisionScope scope(t.prec);
  S = Complex(t.c[0]);
  for (long k = 1; k < t.a; ++k) S += Complex(t.c[static_cast<std::size_t>(k)]) / (w + k);
  Complex base = w + t.a;
  L = (w + 0.5) * log(base) - base;
}

void check_pole(const Complex& z, const PrecisionContext& ctx) {
  if (z.re > 0.25) return;
  Real n = round(z.re);
  if (abs(z.re - n) < ctx.eps() && abs(z.im) < ctx.eps())
    throw PoleError("gamma has a pole at the non-positive integer " + n.to_string(20));
}

// sin(pi z) with the real part reduced to [-1/2, 1/2] first.
Complex sinpi(const Complex& z) {
  Real n = round(z.re);
  Complex r(z.re - n, z.im);
  Complex v = sin(const_pi() * r);
  if (n.to_long() % 2 != 0) v = -v;
  return v;
}

}  // namespace

long spouge_parameter(long bits) {
  double a = std::ceil(static_cast<double>(bits) * std::numbers::ln2 / std::log(2 * std::numbers::pi));
  return static_cast<long>(a) + 2;
}

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
  check_pole(z, ctx);
  const long target = ctx.working_bits() + 8;
  Complex result;
  {
    PrecisionScope scope(target);
    if (z.re < 0.5) {
      Complex g1 = gamma(Complex(1) - z, ctx.raised(8));
      PrecisionScope inner(target);
      result = Complex(const_pi()) / (sinpi(z) * g1);
    } else {
      Complex L, S;
      spouge_pieces(z - 1, target, L, S);
      PrecisionScope inner(target);
      result = exp(L) * S;
    }
  }
  WorkingScope scope(ctx);
  return Complex(rounded(result.re, ctx), rounded(result.im, ctx));
}

Real gamma(const Real& x, const PrecisionContext& ctx) { return gamma(Complex(x), ctx).re; }

Complex lgamma(const Complex& z, const PrecisionContext& ctx) {
  check_pole(z, ctx);
  const long target = ctx.working_bits() + 8;
  Complex result;
  {
    PrecisionScope scope(target);
    if (z.re < 0.5) {
      Complex lg1 = lgamma(Complex(1) - z, ctx.raised(8));
      PrecisionScope inner(target);
      result = Complex(log(const_pi())) - log(sinpi(z)) - lg1;
    } else {
      Complex L, S;
      spouge_pieces(z - 1, target, L, S);
      PrecisionScope inner(target);
      result = L + log(S);
    }
  }
  WorkingScope scope(ctx);
  return Complex(rounded(result.re, ctx), rounded(result.im, ctx));
}

}  // namespace zetakit
