#include "zetakit/melzak.hpp"

#include <cmath>
#include <string>

#include "zetakit/chi.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/schemes.hpp"

namespace zetakit {

namespace {

long log2_ceil(std::size_t n) { return static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 1))); }

Complex rounded_c(const Complex& z, const PrecisionContext& ctx) {
  return Complex(rounded(z.re, ctx), rounded(z.im, ctx));
}

void check_nodes(const Complex& y, std::size_t m, const PrecisionContext& ctx, const char* what) {
  WorkingScope scope(ctx);
  for (std::size_t k = 0; k <= m; ++k)
    if (abs(y - Real(static_cast<unsigned long>(k))) < ctx.eps())
      throw ForbiddenNodeError(std::string(what) + ": y collides with node " + std::to_string(k));
}

// prod_{j=lo..hi, j != skip} (j + shift - s)
Complex shifted_product(long lo, long hi, long skip, const Complex& shift_minus_s) {
  Complex p(1);
  for (long j = lo; j <= hi; ++j)
    if (j != skip) p *= shift_minus_s + Real(j);
  return p;
}

// C(2k,k) for k = 0..m
std::vector<Real> central_binomials(std::size_t m) {
  std::vector<Real> c(m + 1);
  c[0] = Real(1);
  for (std::size_t k = 1; k <= m; ++k)
    c[k] = c[k - 1] * Real(static_cast<unsigned long>(4 * k - 2)) / Real(static_cast<unsigned long>(k));
  return c;
}

Real factorial(std::size_t n) {
  Real f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Real(static_cast<unsigned long>(i));
  return f;
}

// pi / ((m-1)/2)!^2
Real pi_weight(std::size_t m, const PrecisionContext& ctx) {
  Real g = gamma(Real(static_cast<unsigned long>(m + 1)) / 2, ctx);
  WorkingScope scope(ctx);
  return const_pi() / (g * g);
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back().re.is_zero() && coeffs.back().im.is_zero()) coeffs.pop_back();
}

std::size_t Polynomial::degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

Complex Polynomial::operator()(const Complex& x) const {
  Complex acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex melzak_prefactor(const Complex& y, std::size_t m) {
  Complex p = -shifted_product(0, static_cast<long>(m), -1, -y);
  return p / factorial(m);
}

Complex melzak_transform(const Polynomial& f, const Complex& x, const Complex& y, const PrecisionContext& ctx,
                         std::optional<std::size_t> m) {
  const std::size_t M = m.value_or(f.degree());
  check_nodes(y, M, ctx, "melzak_transform");
  PrecisionContext hi = ctx.raised(static_cast<long>(M) + log2_ceil(M) + 16);
  WorkingScope scope(hi);
  Complex sum;
  Real binom(1);
  for (std::size_t k = 0; k <= M; ++k) {
    const unsigned long kl = static_cast<unsigned long>(k);
    if (k > 0) binom = binom * Real(static_cast<unsigned long>(M - k + 1)) / Real(kl);
    Complex t = f(x - Real(kl)) * binom / (y - Real(kl));
    if (k % 2 == 1)
      sum -= t;
    else
      sum += t;
  }
  return rounded_c(melzak_prefactor(y, M) * sum, ctx);
}

Real admissibility_residual(const TaylorCoefficients& a, const Complex& y, std::size_t m, const PrecisionContext& ctx,
                            std::size_t max_terms) {
  check_nodes(y, m, ctx, "admissibility_residual");

  // tails[k] = sum_{i>m} a_i (-k)^i, summed at `bits`; returns the largest term exponent seen.
  auto tails_at = [&](long bits, std::vector<Complex>& tails) {
    PrecisionScope scope(bits);
    tails.assign(m + 1, Complex());
    long peak = -(1L << 40);
    const Real target = pow2(-bits);
    for (std::size_t k = 1; k <= m; ++k) {
      const Real mk = -Real(static_cast<unsigned long>(k));
      Real power = pow(mk, static_cast<long>(m));  // (-k)^i, advanced before use
      int small_run = 0;
      std::size_t i = m + 1;
      for (; i < max_terms; ++i) {
        power *= mk;
        Complex term = a(i) * power;
        tails[k] += term;
        Real mag = abs(term);
        if (!mag.is_zero()) peak = std::max(peak, mag.exponent());
        small_run = (mag < target * max(Real(1), abs(tails[k]))) ? small_run + 1 : 0;
        if (small_run >= 8 && i > 2 * k) break;
      }
      if (i >= max_terms)
        throw ConvergenceError("Taylor tail at -" + std::to_string(k) + " did not settle within " +
                               std::to_string(max_terms) + " coefficients");
    }
    return peak;
  };

  std::vector<Complex> tails;
  long peak = tails_at(ctx.working_bits(), tails);
  const long w = ctx.working_bits() + std::max(0L, peak) + static_cast<long>(m) + 16;
  tails_at(w, tails);

  PrecisionScope scope(w);
  Complex sum;
  Real binom(1);
  for (std::size_t k = 0; k <= m; ++k) {
    const unsigned long kl = static_cast<unsigned long>(k);
    if (k > 0) binom = binom * Real(static_cast<unsigned long>(m - k + 1)) / Real(kl);
    Complex t = tails[k] * binom / (y - Real(kl));
    if (k % 2 == 1)
      sum -= t;
    else
      sum += t;
  }
  return rounded(abs(melzak_prefactor(y, m) * sum), ctx);
}

std::pair<Complex, Complex> identity62(std::size_t m, const Complex& y, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("identity62 requires m >= 1");
  check_nodes(y, m, ctx, "identity62");
  PrecisionContext hi = ctx.raised(log2_ceil(m) + 16);
  WorkingScope scope(hi);
  const std::vector<Real> cb = central_binomials(m);
  Complex sum;
  for (std::size_t k = 0; k <= m; ++k) sum += cb[k] * cb[m - k] / (y - Real(static_cast<unsigned long>(k)));
  Complex lhs = melzak_prefactor(y, m) * sum;
  Complex rhs = shifted_product(0, static_cast<long>(m) - 1, -1, Complex(Real(0.5)) - y) *
                pow2(2 * static_cast<long>(m)) / factorial(m);
  return {rounded_c(lhs, ctx), rounded_c(rhs, ctx)};
}

std::pair<Complex, Complex> identity63(std::size_t m, const Complex& s, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("identity63 requires m >= 1");
  PrecisionContext hi = ctx.raised(log2_ceil(m) + 16);
  const Real w = pi_weight(m, hi);
  WorkingScope scope(hi);
  const std::vector<Real> cb = central_binomials(m);
  const long ml = static_cast<long>(m);
  Complex lhs = w * shifted_product(0, ml - 1, -1, Complex(Real(2.5)) - s);
  Complex rhs;
  for (long k = 0; k <= ml; ++k) rhs += cb[k] * cb[m - k] * shifted_product(0, ml, k, Complex(2) - s);
  rhs = rhs * w * pow2(-2 * ml);
  return {rounded_c(lhs, ctx), rounded_c(rhs, ctx)};
}

std::pair<Complex, Complex> identity64(std::size_t m, const Complex& beta, const Complex& gamma_shift, const Complex& s,
                                       const PrecisionContext& ctx) {
  {
    WorkingScope scope(ctx);
    if (abs(beta.im) < ctx.eps() && abs(beta.re - round(beta.re)) < ctx.eps())
      throw IntegerBetaError("identity64 requires a non-integer beta");
  }
  check_nodes(s - gamma_shift, m, ctx, "identity64");
  PrecisionContext hi = ctx.raised(static_cast<long>(m) + log2_ceil(m) + 16);
  const long ml = static_cast<long>(m);
  std::vector<Complex> g_left(m + 1), g_right(m + 1);
  for (long k = 0; k <= ml; ++k) {
    WorkingScope scope(hi);
    Complex a = Complex(Real(ml - k + 1)) - beta;
    Complex b = Complex(Real(k)) + beta;
    g_left[static_cast<std::size_t>(k)] = gamma(a, hi);
    g_right[static_cast<std::size_t>(k)] = gamma(b, hi);
  }
  WorkingScope scope(hi);
  Complex lhs = const_pi() / sin(const_pi() * beta) *
                shifted_product(0, ml - 1, -1, gamma_shift + Real(1) - beta - s);
  Complex rhs;
  for (long k = 0; k <= ml; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    rhs += g_left[ku] * g_right[ku] / (factorial(ku) * factorial(m - ku)) *
           shifted_product(0, ml, k, gamma_shift - s);
  }
  return {rounded_c(lhs, ctx), rounded_c(rhs, ctx)};
}

EpsilonVector epsilon_coeffs(std::size_t m, const PrecisionContext& ctx) {
  if (m < 2 || m % 2 != 0) throw DomainError("epsilon_coeffs requires an even m >= 2");
  PrecisionContext hi = ctx.raised(log2_ceil(m) + 16);
  EpsilonVector out;
  out.m = m;
  Real g_mid = gamma(Real(static_cast<unsigned long>(m + 1)) / 2, hi);
  std::vector<Real> g_half(m + 1);  // Gamma(k + 1/2)
  for (std::size_t k = 0; k <= m; ++k) {
    WorkingScope scope(hi);
    g_half[k] = gamma(Real(static_cast<unsigned long>(2 * k + 1)) / 2, hi);
  }
  std::vector<Real> etas;
  for (std::size_t k = 0; k <= m; ++k) etas.push_back(eta_integer(static_cast<unsigned long>(k + 2), hi));

  WorkingScope scope(hi);
  const Real g2 = g_mid * g_mid;
  for (std::size_t k = 0; k <= m; ++k) {
    Real denom = factorial(k) * factorial(m - k);
    Real g = g_half[k] * g_half[m - k] / g2;
    Real e = k % 2 == 1 ? -etas[k] : etas[k];
    out.eps.push_back(rounded((e + g) / denom, ctx));
    out.positive_part.push_back(rounded(g / denom, ctx));
  }
  out.pi_weight = rounded(const_pi() / g2, ctx);
  return out;
}

Real epsilon_sum_closed_form(std::size_t m, const PrecisionContext& ctx) {
  if (m < 2 || m % 2 != 0) throw DomainError("epsilon_sum_closed_form requires an even m >= 2");
  PrecisionContext hi = ctx.raised(16);
  Real c = chi(static_cast<unsigned long>(m + 1), hi);
  Real w = pi_weight(m, hi);
  WorkingScope scope(hi);
  return rounded(c / factorial(m + 1) + w, ctx);
}

namespace {

Complex via66_value(const Complex& s, std::size_t m, const PrecisionContext& ctx, bool* at_node) {
  {
    WorkingScope scope(ctx);
    for (std::size_t k = 0; k <= m; ++k) {
      if (abs(s - Real(static_cast<unsigned long>(k + 2))) < ctx.eps()) {
        *at_node = true;
        return Complex(eta_integer(static_cast<unsigned long>(k + 2), ctx));
      }
    }
  }
  *at_node = false;
  PrecisionContext hi = ctx.raised(static_cast<long>(m) + log2_ceil(m) + 16);
  EpsilonVector ev = epsilon_coeffs(m, hi);
  WorkingScope scope(hi);
  const long ml = static_cast<long>(m);
  Complex sum;
  for (long k = 0; k <= ml; ++k) sum += ev.eps[static_cast<std::size_t>(k)] * shifted_product(0, ml, k, Complex(2) - s);
  sum -= ev.pi_weight * shifted_product(0, ml - 1, -1, Complex(Real(2.5)) - s);
  return sum;
}

}  // namespace

EvalResult eta_via66(const Complex& s, std::size_t m, const PrecisionContext& ctx) {
  if (!(s.re > 0)) throw DomainError("eta_via66 requires Re(s) > 0");
  if (m < 2 || m % 2 != 0) throw DomainError("eta_via66 requires an even m >= 2");
  bool node = false;
  Complex v = via66_value(s, m, ctx, &node);
  Real err;
  if (!node && m >= 4) {
    Real diff;
    Complex cur = v;
    for (std::size_t back = 2; back <= 4 && back + 2 <= m; back += 2) {
      bool prev_node = false;
      Complex p = via66_value(s, m - back, ctx, &prev_node);
      WorkingScope scope(ctx);
      diff = max(diff, abs(cur - p));
      cur = p;
    }
    WorkingScope scope(ctx);
    err = diff * Real(static_cast<unsigned long>(m + 1)) / s.re;
  }
  WorkingScope scope(ctx);
  EvalResult r;
  r.value = rounded_c(v, ctx);
  r.terms_used = m + 1;
  r.err_estimate = err + pow2(-ctx.working_bits()) * Real(static_cast<unsigned long>(m + 16));
  r.scheme_id = "via66";
  r.bits = ctx.bits();
  return r;
}

}  // namespace zetakit
