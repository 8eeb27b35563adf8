#include "zetakit/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "quadrature.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/gamma.hpp"

namespace zetakit {

namespace {

constexpr int kQuadMaxLevel = 12;

long bits_for(const Real& x) { return x.is_zero() ? 0 : std::max(0L, -x.exponent()); }

// log(2 Gamma(sigma) / |Gamma(s)|): the CVZ moment bound for eta, Re(s) > 0.
double eta_bound_log(const Complex& s) {
  PrecisionContext low(64, 16);
  PrecisionScope scope(low.working_bits());
  Real lg_sigma = lgamma(Complex(s.re), low).re;
  Real lg_s = lgamma(s, low).re;
  return std::numbers::ln2 + (lg_sigma - lg_s).to_double();
}

}  // namespace

EvalResult eta_ref(const Complex& s, const PrecisionContext& ctx) {
  if (!(s.re > 0)) throw DomainError("eta_ref requires Re(s) > 0");
  const double ln_rate = std::log(3 + std::sqrt(8.0));
  const double log_bound = eta_bound_log(s);
  const double target = static_cast<double>(ctx.working_bits()) * std::numbers::ln2 + log_bound + 2;
  const long n = std::max(1L, static_cast<long>(std::ceil(target / ln_rate)));
  const long w = ctx.working_bits() + static_cast<long>(std::ceil(std::log2(n + 1.0))) + 8;

  Complex value;
  Real rounding;
  {
    PrecisionScope scope(w);
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built from term ratios.
    std::vector<Real> d(static_cast<std::size_t>(n) + 1);
    Real term(1);
    Real acc(1);
    d[0] = acc;
    for (long i = 1; i <= n; ++i) {
      term *= Real(4 * (n + i - 1)) * Real(n - i + 1);
      term /= Real((2 * i - 1) * (2 * i));
      acc += term;
      d[static_cast<std::size_t>(i)] = acc;
    }
    const Real& dn = d[static_cast<std::size_t>(n)];
    Complex sum;
    for (long k = 0; k < n; ++k) {
      Real c = (d[static_cast<std::size_t>(k)] - dn) / dn;
      if (k % 2 == 1) c = -c;
      sum += inv_pow(static_cast<unsigned long>(k + 1), s) * c;
    }
    value = -sum;
    rounding = pow2(-w) * Real(4 * n);
  }

  WorkingScope scope(ctx);
  EvalResult r;
  r.value = Complex(rounded(value.re, ctx), rounded(value.im, ctx));
  r.terms_used = static_cast<std::size_t>(n);
  r.err_estimate = exp(Real(log_bound) - Real(ln_rate) * n) + rounding;
  r.scheme_id = "eta_ref";
  r.bits = ctx.bits();
  return r;
}

Complex eta_zeta_denominator(const Complex& s, const PrecisionContext& ctx) {
  WorkingScope scope(ctx);
  Real se = ctx.sqrt_eps();
  if (abs(s - 1) < se) throw PoleError("zeta has a pole at s = 1");
  Complex denom = Complex(1) - pow(Real(2), Complex(1) - s);
  if (abs(denom) < se)
    throw ConditioningError("s is within sqrt(eps) of a zero of 1 - 2^(1-s)");
  return denom;
}

EvalResult eta_to_zeta(const EvalResult& eta, const Complex& s, const PrecisionContext& ctx) {
  Complex denom = eta_zeta_denominator(s, ctx);
  WorkingScope scope(ctx);
  EvalResult z = eta;
  z.value = eta.value / denom;
  z.err_estimate = eta.err_estimate / abs(denom);
  return z;
}

EvalResult zeta_ref(const Complex& s, const PrecisionContext& ctx) {
  if (!(s.re > 0)) throw DomainError("zeta_ref requires Re(s) > 0");
  Complex denom = eta_zeta_denominator(s, ctx);
  long extra;
  {
    WorkingScope scope(ctx);
    extra = bits_for(abs(denom));
  }
  PrecisionContext raised = ctx.raised(extra);
  EvalResult eta = eta_ref(s, raised);
  Complex denom_hi = eta_zeta_denominator(s, raised);
  WorkingScope scope(ctx);
  EvalResult z;
  Complex v = eta.value / denom_hi;
  z.value = Complex(rounded(v.re, ctx), rounded(v.im, ctx));
  z.err_estimate = eta.err_estimate / abs(denom_hi) + abs(z.value) * ctx.eps() / 16;
  z.terms_used = eta.terms_used;
  z.scheme_id = "zeta_ref";
  z.bits = ctx.bits();
  return z;
}

EvalResult zeta_quad_oracle(const Complex& s, const PrecisionContext& ctx) {
  if (!(s.re > 0)) throw DomainError("zeta_quad_oracle requires Re(s) > 0");
  Complex denom = eta_zeta_denominator(s, ctx);

  // Oscillation of x^(i t) makes the integral smaller than the integral of
  // its modulus by about exp(pi |t| / 2); carry that many extra bits.
  const double t_abs = std::fabs(s.im.to_double());
  const long extra = static_cast<long>(std::ceil(std::numbers::pi * t_abs / 2 / std::numbers::ln2)) + 16;
  const long w = ctx.working_bits() + extra;

  Complex total;
  Real err;
  std::size_t evaluations = 0;
  Complex g;
  {
    PrecisionContext wctx(w - ctx.guard_bits(), ctx.guard_bits());
    g = gamma(s, wctx);
    PrecisionScope scope(w);
    const Real tol = pow2(-ctx.working_bits()) * min(Real(1), abs(g));
    const Real pi = const_pi();

    // [0, 1]: term-wise integration of the Taylor series of 1/(e^x + 1),
    // whose radius of convergence is pi.
    const long kmax = static_cast<long>(std::ceil((w + 8) * std::numbers::ln2 / std::log(std::numbers::pi))) + 4;
    std::vector<Real> b(static_cast<std::size_t>(kmax) + 1);
    std::vector<Real> inv_fact(static_cast<std::size_t>(kmax) + 1);
    inv_fact[0] = Real(1);
    for (long i = 1; i <= kmax; ++i) inv_fact[static_cast<std::size_t>(i)] = inv_fact[static_cast<std::size_t>(i - 1)] / Real(i);
    b[0] = Real(0.5);
    for (long k = 1; k <= kmax; ++k) {
      Real acc;
      for (long j = 0; j < k; ++j) acc += b[static_cast<std::size_t>(j)] * inv_fact[static_cast<std::size_t>(k - j)];
      b[static_cast<std::size_t>(k)] = -acc / 2;
    }
    for (long k = 0; k <= kmax; ++k) {
      if (b[static_cast<std::size_t>(k)].is_zero()) continue;
      total += Complex(b[static_cast<std::size_t>(k)]) / (s + k);
    }
    err += pow(pi, -kmax) * 8;
    evaluations += static_cast<std::size_t>(kmax) + 1;

    auto integrand = [&](const Real& x) -> Complex {
      Real lx = log(x);
      Real mag = exp((s.re - 1) * lx - x) / (1 + exp(-x));
      if (s.im.is_zero()) return Complex(mag);
      Complex e = expi(s.im * lx);
      return {mag * e.re, mag * e.im};
    };

    const long split = std::max(1L, static_cast<long>(std::ceil(t_abs)));
    detail::TanhSinhRule rule(w, kQuadMaxLevel);
    for (long k = 1; k < split; ++k) {
      auto q = rule.integrate(integrand, Real(k), Real(k + 1), tol);
      if (!q.converged) throw QuadratureError("tanh-sinh did not converge on a unit interval");
      total += q.value;
      err += q.err;
      evaluations += q.evaluations;
    }
    auto tail = detail::exp_sinh(integrand, Real(split), tol, w, kQuadMaxLevel);
    if (!tail.converged) throw QuadratureError("exp-sinh did not converge on the tail");
    total += tail.value;
    err += tail.err;
    evaluations += tail.evaluations;
  }

  WorkingScope scope(ctx);
  Complex scale = g * denom;
  Complex v = total / scale;
  EvalResult r;
  r.value = Complex(rounded(v.re, ctx), rounded(v.im, ctx));
  r.err_estimate = err / abs(scale) + abs(r.value) * ctx.eps() / 16;
  r.terms_used = evaluations;
  r.scheme_id = "zeta_quad_oracle";
  r.bits = ctx.bits();
  return r;
}

Real functional_eq_residual(const Complex& s, const PrecisionContext& ctx) {
  if (!(s.re > 0 && s.re < 1)) throw DomainError("functional_eq_residual requires 0 < Re(s) < 1");
  if (abs(s - 1) <= ctx.sqrt_eps()) throw DomainError("s too close to the pole");
  EvalResult left = zeta_ref(Complex(1) - s, ctx);
  EvalResult right = zeta_ref(s, ctx);
  Complex g = gamma(s, ctx);
  WorkingScope scope(ctx);
  Real pi = const_pi();
  Complex factor = pow(Real(2), Complex(1) - s) * pow(pi, -s) * cos(s * pi / 2) * g;
  return abs(left.value - factor * right.value);
}

Complex kappa_prefactor(const Complex& s, const PrecisionContext& ctx) {
  if (!(s.re > 0 && s.re < 1)) throw DomainError("kappa_prefactor requires 0 < Re(s) < 1");
  Complex g = gamma(s, ctx);
  WorkingScope scope(ctx);
  Real pi = const_pi();
  Complex p = pow(Real(2), Complex(1) - s);
  return (p - 2) * pow(pi, -s) * cos(s * pi / 2) * g + (Complex(1) - p);
}

}  // namespace zetakit
