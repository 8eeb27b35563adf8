#include "zetakit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "zetakit/chi.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/melzak.hpp"
#include "zetakit/schemes.hpp"

namespace zetakit {

namespace {

struct ValueSlope {
  Real f;
  Real df;
};

// Root of an increasing function on [lo, hi] with f(lo) < 0 < f(hi):
// Newton steps kept inside the shrinking bracket, bisection otherwise.
Real solve_increasing(const std::function<ValueSlope(const Real&)>& g, Real lo, Real hi, long bits) {
  Real x = (lo + hi) / 2;
  for (long it = 0; it < 4 * bits + 64; ++it) {
    ValueSlope v = g(x);
    if (v.f.is_zero()) return x;
    if (v.f < 0)
      lo = x;
    else
      hi = x;
    Real next;
    bool newton = v.df > 0;
    if (newton) {
      next = x - v.f / v.df;
      newton = next > lo && next < hi;
    }
    if (!newton) next = (lo + hi) / 2;
    const Real tol = ldexp(max(abs(x), Real(1)), 6 - bits);
    const Real step = abs(next - x);
    x = next;
    if (step <= tol || hi - lo <= tol) break;
  }
  return x;
}

// Root of f on [lo, hi] given opposite signs at the ends.
Real bisect_sign(const std::function<Real(const Real&)>& f, Real lo, Real hi, long bits) {
  int s_lo = f(lo).sign();
  for (long it = 0; it < 2 * bits + 64; ++it) {
    Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    int s = f(mid).sign();
    if (s == 0) return mid;
    if (s == s_lo)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= ldexp(max(abs(mid), Real(1)), 2 - bits)) break;
  }
  return (lo + hi) / 2;
}

// Offsets a_j - 1/2, mirrored so the nonzero ones are positive.
std::vector<Real> offsets(const std::vector<Real>& nodes) {
  std::vector<Real> d;
  bool negative = false;
  for (const Real& a : nodes) {
    d.push_back(a - Real(0.5));
    if (d.back() < 0) negative = true;
  }
  if (negative)
    for (Real& v : d) v = -v;
  return d;
}

void check_offsets(const std::vector<Real>& nodes) {
  int sign = 0;
  bool any = false;
  for (const Real& a : nodes) {
    Real d = a - Real(0.5);
    if (d.is_zero()) continue;
    any = true;
    if (sign == 0)
      sign = d.sign();
    else if (d.sign() != sign)
      throw HypothesisError("node offsets a_j - 1/2 have mixed signs");
  }
  if (!any) throw HypothesisError("all node offsets a_j - 1/2 vanish");
}

// |prod (d+ix) + prod (d-ix)| / (2 prod |d+ix|), straight from the products.
Real sym_residual(const std::vector<Real>& d, const Real& x) {
  Complex p(1), q(1);
  Real scale(2);
  for (const Real& v : d) {
    p *= Complex(v, x);
    q *= Complex(v, -x);
    scale *= hypot(v, x);
  }
  return abs(p + q) / scale;
}

Real upper_bracket(const std::function<Real(const Real&)>& phase, const Real& level) {
  Real hi(1);
  while (!(phase(hi) > level)) hi *= 2;
  return hi;
}

Real factorial(std::size_t n) {
  Real f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Real(static_cast<unsigned long>(i));
  return f;
}

Real half_gamma_weight(std::size_t m, const PrecisionContext& ctx) {
  Real g = gamma(Real(static_cast<unsigned long>(m + 1)) / 2, ctx);
  WorkingScope scope(ctx);
  return const_pi() / (g * g);
}

void require_even(std::size_t m, std::size_t min, const char* who) {
  if (m < min || m % 2 != 0) throw DomainError(std::string(who) + " requires an even m >= " + std::to_string(min));
}

}  // namespace

std::string to_string(RootFamily f) {
  switch (f) {
    case RootFamily::nu: return "nu";
    case RootFamily::tau: return "tau";
    case RootFamily::T: return "T";
    case RootFamily::theta: return "theta";
    case RootFamily::phi: return "phi";
    case RootFamily::lambda: return "lambda";
    case RootFamily::omega: return "omega";
    case RootFamily::Omega: return "Omega";
    case RootFamily::tan49: return "tan49";
  }
  return "unknown";
}

PrecisionContext family_context(std::size_t m, const PrecisionContext& ctx) {
  const long need = 2 * static_cast<long>(m) + 128;
  if (m >= 32 && ctx.bits() < need) return ctx.with_bits(need);
  return ctx;
}

void SymmetrizedFactorial::validate() const {
  if (nodes.size() < 2) throw DomainError("a symmetrized factorial needs at least two nodes");
  check_offsets(nodes);
}

Complex SymmetrizedFactorial::operator()(const Complex& s) const {
  Complex p(1), q(1);
  for (const Real& a : nodes) {
    p *= s + (a - 1);
    q *= Complex(a) - s;
  }
  return p + q;
}

RootList sym_roots(const SymmetrizedFactorial& sf, const PrecisionContext& ctx) {
  sf.validate();
  WorkingScope scope(ctx);
  const std::vector<Real> d = offsets(sf.nodes);
  long zeros = 0;
  for (const Real& v : d)
    if (v.is_zero()) ++zeros;
  const long n = static_cast<long>(d.size());

  auto phase = [&d](const Real& x) {
    Real acc;
    for (const Real& v : d) acc += atan2(x, v);
    return acc;
  };
  RootList out;
  out.family = RootFamily::tau;
  out.m = d.size();
  const Real half_pi = const_pi() / 2;
  for (long k = 0; 2 * k + 1 < n; ++k) {
    if (2 * k + 1 <= zeros) continue;  // level reached at x = 0 or below
    const Real level = half_pi * Real(2 * k + 1);
    Real hi = upper_bracket(phase, level);
    Real x = solve_increasing(
        [&](const Real& t) {
          ValueSlope v{phase(t) - level, Real(0)};
          for (const Real& c : d) v.df += c / (c * c + t * t);
          return v;
        },
        Real(0), hi, ctx.working_bits());
    out.values.push_back(x);
    out.residuals.push_back(sym_residual(d, x));
  }
  return out;
}

std::map<std::size_t, RootList> nu_table(std::size_t n_max, const PrecisionContext& ctx) {
  if (n_max < 3) throw DomainError("nu_table requires n_max >= 3");
  std::map<std::size_t, RootList> out;
  for (std::size_t n = 3; n <= n_max; ++n) {
    SymmetrizedFactorial sf;
    for (std::size_t j = 0; j + 2 <= n; ++j) sf.nodes.push_back(Real(static_cast<unsigned long>(j + 2)));
    RootList r = sym_roots(sf, ctx);
    r.family = RootFamily::nu;
    r.m = n;
    out.emplace(n, std::move(r));
  }
  return out;
}

RootList tan_zeros49(std::size_t n, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("tan_zeros49 requires n >= 2");
  WorkingScope scope(ctx);
  RootList out;
  out.family = RootFamily::tan49;
  out.m = n;
  const Real pi = const_pi();
  for (std::size_t k = 1; k <= n / 2; ++k) {
    Real v = abs(tan(pi * Real(static_cast<unsigned long>(2 * k - 1)) / Real(static_cast<unsigned long>(2 * n)))) / 2;
    out.values.push_back(v);
    Complex s(Real(0.5), v);
    Complex f = pow(Real(1) - s, static_cast<long>(n)) + pow(s, static_cast<long>(n));
    out.residuals.push_back(abs(f) / (2 * pow(abs(s), static_cast<long>(n))));
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

Complex combined_value(const std::vector<Real>& c, const std::vector<Real>& nodes, const Complex& s) {
  Complex total;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (c[k].is_zero()) continue;
    Complex p(1), q(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == k) continue;
      p *= s + (nodes[j] - 1);
      q *= Complex(nodes[j]) - s;
    }
    total += c[k] * (p + q);
  }
  return total;
}

RootList combined_roots(const std::vector<Real>& c_in, const std::vector<Real>& nodes, const PrecisionContext& ctx) {
  if (c_in.size() != nodes.size()) throw DomainError("combined_roots: one coefficient per node");
  if (nodes.size() < 3) throw DomainError("combined_roots needs at least three nodes");
  check_offsets(nodes);
  WorkingScope scope(ctx);
  int sign = 0;
  for (const Real& v : c_in) {
    if (v.is_zero()) continue;
    if (sign == 0)
      sign = v.sign();
    else if (v.sign() != sign)
      throw HypothesisError("combination coefficients have mixed signs");
  }
  if (sign == 0) throw HypothesisError("all combination coefficients vanish");
  std::vector<Real> c = c_in;
  if (sign < 0)
    for (Real& v : c) v = -v;
  const std::vector<Real> d = offsets(nodes);

  long zeros = 0;
  bool weighted_zero = false;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!d[k].is_zero()) continue;
    ++zeros;
    if (c[k] > 0) weighted_zero = true;
  }
  const long start = zeros - (weighted_zero ? 1 : 0);  // phase at 0+ in units of pi/2
  const long top = static_cast<long>(d.size()) - 1;    // phase at infinity

  // Theta(x) + arg R(x), R(x) = sum_k c_k/(d_k + ix).
  auto eval = [&](const Real& x) {
    ValueSlope v;
    Complex R, dR;
    for (std::size_t k = 0; k < d.size(); ++k) {
      v.f += atan2(x, d[k]);
      v.df += d[k] / (d[k] * d[k] + x * x);
      if (c[k].is_zero()) continue;
      Complex inv = 1 / Complex(d[k], x);
      R += c[k] * inv;
      dR += Complex(Real(0), -c[k]) * inv * inv;
    }
    v.f += atan2(R.im, R.re);
    v.df += (dR / R).im;
    return v;
  };
  auto phase = [&](const Real& x) { return eval(x).f; };

  RootList out;
  out.family = RootFamily::T;
  out.m = d.size() - 1;
  const Real half_pi = const_pi() / 2;
  const Real lo = zeros > 0 ? pow2(-ctx.working_bits() / 2) : Real(0);
  for (long k = 0; 2 * k + 1 < top; ++k) {
    if (2 * k + 1 <= start) continue;
    const Real level = half_pi * Real(2 * k + 1);
    Real hi = upper_bracket(phase, level);
    Real x = solve_increasing(
        [&](const Real& t) {
          ValueSlope v = eval(t);
          v.f -= level;
          return v;
        },
        lo, hi, ctx.working_bits());
    out.values.push_back(x);
    Real scale(2);
    Real weight;
    for (std::size_t k2 = 0; k2 < d.size(); ++k2) {
      Real r = hypot(d[k2], x);
      scale *= r;
      weight += c[k2] / r;
    }
    out.residuals.push_back(abs(combined_value(c, nodes, Complex(Real(0.5), x))) / (scale * weight));
  }
  return out;
}

ThetaPhi theta_phi_roots(std::size_t m, const PrecisionContext& ctx_in) {
  require_even(m, 4, "theta_phi_roots");
  const PrecisionContext ctx = family_context(m, ctx_in);
  std::vector<Real> etas;
  for (std::size_t k = 0; k <= m; ++k) etas.push_back(eta_integer(static_cast<unsigned long>(k + 2), ctx));
  WorkingScope scope(ctx);
  std::vector<Real> nodes, even(m + 1), odd(m + 1);
  ThetaPhi out;
  out.m = m;
  for (std::size_t k = 0; k <= m; ++k) {
    nodes.push_back(Real(static_cast<unsigned long>(k + 2)));
    Real c = etas[k] / (factorial(k) * factorial(m - k));
    if (k % 2 == 0) {
      even[k] = c;
      out.weight_even += c;
    } else {
      odd[k] = c;
      out.weight_odd += c;
    }
  }
  out.theta = combined_roots(even, nodes, ctx);
  out.theta.family = RootFamily::theta;
  out.phi = combined_roots(odd, nodes, ctx);
  out.phi.family = RootFamily::phi;
  return out;
}

Complex theta_phi_reconstruct(const ThetaPhi& tp, const Complex& s, const PrecisionContext& ctx) {
  WorkingScope scope(ctx);
  Complex y = (s - Real(0.5)) * (s - Real(0.5));
  Complex a = 2 * tp.weight_even, b = 2 * tp.weight_odd;
  for (const Real& t : tp.theta.values) a *= y + t * t;
  for (const Real& t : tp.phi.values) b *= y + t * t;
  return a - b;
}

ShiftVector d_shifts(std::size_t m, const PrecisionContext& ctx_in) {
  require_even(m, 4, "d_shifts");
  const PrecisionContext ctx = family_context(m, ctx_in);
  const EpsilonVector ev = epsilon_coeffs(m, ctx.raised(16));
  WorkingScope scope(ctx.raised(16));
  const long bits = ctx.working_bits();
  auto S = [&](const Real& x) {
    ValueSlope v;
    for (std::size_t k = 0; k <= m; ++k) {
      Real inv = 1 / (Real(static_cast<unsigned long>(k + 2)) - x);
      v.f += ev.eps[k] * inv;
      v.df += ev.eps[k] * inv * inv;
    }
    return v;
  };
  ShiftVector out;
  out.m = m;
  const Real tiny = pow2(-bits / 2);
  for (std::size_t j = 0; j < m; ++j) {
    const Real a = Real(static_cast<unsigned long>(j + 2));
    Real lo = a + tiny, hi = a + 1 - tiny;
    if (!(S(lo).f < 0) || !(S(hi).f > 0))
      throw RootCountError("no sign change of f_d on (" + std::to_string(j + 2) + ", " + std::to_string(j + 3) + ")");
    Real r = solve_increasing(S, lo, hi, bits);
    Real dj = r - a;
    out.d.push_back(rounded(dj, ctx));
    const bool in_unit = dj > 0 && dj < 1;
    const bool ok = j % 2 == 1 ? (dj > 0 && dj < Real(0.5)) : (dj > Real(0.5) && dj < 1);
    out.parity_ok.push_back(ok);
    if (!in_unit) out.all_in_unit = false;
    if (!ok) {
      out.ordering_ok = false;
      out.findings.push_back("d_" + std::to_string(j) + " = " + dj.to_string(12) + " breaks the parity ordering");
    }
  }
  return out;
}

InterlaceReport interlace(const RootList& left, const RootList& right) {
  InterlaceReport rep;
  rep.left_family = to_string(left.family);
  rep.right_family = to_string(right.family);
  struct Entry {
    Real y;
    char tag;
  };
  std::vector<Entry> all;
  for (const Real& v : left.values) all.push_back({v * v, 'L'});
  for (const Real& v : right.values) all.push_back({v * v, 'W'});
  std::stable_sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.y < b.y; });
  rep.first_break = all.size();
  bool alternates = !all.empty();
  bool gaps_positive = true;
  bool have_gap = false;
  for (std::size_t i = 0; i < all.size(); ++i) {
    rep.pattern.push_back(all[i].tag);
    if (i == 0) continue;
    Real gap = all[i].y - all[i - 1].y;
    if (!have_gap || gap < rep.min_gap) rep.min_gap = gap;
    have_gap = true;
    if (!(gap > 0)) gaps_positive = false;
    if (all[i].tag == all[i - 1].tag && alternates) {
      alternates = false;
      rep.first_break = i;
    }
  }
  rep.strict = alternates && gaps_positive && left.values.size() == right.values.size();
  if (rep.strict)
    rep.orientation = all.front().tag == 'L' ? "lambda-first" : "omega-first";
  else
    rep.orientation = "none";
  return rep;
}

LambdaOmega lambda_omega(std::size_t m, const ShiftVector& d, const PrecisionContext& ctx_in) {
  require_even(m, 2, "lambda_omega");
  if (d.d.size() != m) throw DomainError("lambda_omega: shift vector has the wrong length");
  const PrecisionContext ctx = family_context(m, ctx_in);
  WorkingScope scope(ctx);
  SymmetrizedFactorial h, w;
  for (std::size_t j = 0; j < m; ++j) {
    const Real jr(static_cast<unsigned long>(j));
    h.nodes.push_back(jr + Real(2.5));
    w.nodes.push_back(jr + 2 + d.d[j]);
  }
  LambdaOmega out;
  out.m = m;
  out.lambda = sym_roots(h, ctx);
  out.lambda.family = RootFamily::lambda;
  out.lambda.m = m;
  out.omega = sym_roots(w, ctx);
  out.omega.family = RootFamily::omega;
  out.omega.m = m;
  out.interlace = interlace(out.lambda, out.omega);
  return out;
}

OmegaResult omega_caps(std::size_t m, const PrecisionContext& ctx_in) {
  require_even(m, 8, "omega_caps");
  const PrecisionContext ctx = family_context(m, ctx_in);
  ShiftVector d = d_shifts(m, ctx.raised(static_cast<long>(m) + 32));
  LambdaOmega lo = lambda_omega(m, d, ctx.raised(static_cast<long>(m) + 32));
  return omega_caps(m, lo, ctx);
}

OmegaResult omega_caps(std::size_t m, const LambdaOmega& lo, const PrecisionContext& ctx_in) {
  require_even(m, 8, "omega_caps");
  const PrecisionContext base = family_context(m, ctx_in);
  OmegaResult out;
  out.m = m;
  const std::size_t h = m / 2;
  if (lo.lambda.values.size() != h || lo.omega.values.size() != h)
    throw RootCountError("lambda/omega families must each have m/2 roots");

  out.chi_m1 = chi(static_cast<unsigned long>(m + 1), base.raised(16));
  Real B;
  {
    Real w = half_gamma_weight(m, base.raised(16));
    WorkingScope scope(base.raised(16));
    B = 2 * w;
    out.lead = 2 * out.chi_m1 / factorial(m + 1);
  }
  if (out.lead.is_zero()) throw PrecisionError("omega_caps: leading coefficient vanished");
  const long extra = std::max(0L, B.exponent() - out.lead.exponent()) + 32;
  const PrecisionContext ctx = base.raised(extra);
  WorkingScope scope(ctx);
  const long bits = ctx.working_bits();

  std::vector<Real> lam2, om2;
  for (const Real& v : lo.lambda.values) lam2.push_back(v * v);
  for (const Real& v : lo.omega.values) om2.push_back(v * v);
  const Real lead = out.lead + Real(0);

  // P(y) = B [prod (y + om2) - prod (y + lam2)] + lead prod (y + om2)
  auto P = [&](const Complex& y) {
    Complex po(1), pl(1);
    for (std::size_t j = 0; j < h; ++j) {
      po *= y + om2[j];
      pl *= y + lam2[j];
    }
    return B * (po - pl) + lead * po;
  };
  auto Preal = [&](const Real& y) { return P(Complex(y)).re; };

  // Coefficients for the Cauchy bound.
  auto expand = [&](const std::vector<Real>& r) {
    std::vector<Real> c(h + 1);
    c[0] = Real(1);
    for (std::size_t j = 0; j < h; ++j) {
      for (std::size_t i = j + 1; i > 0; --i) c[i] = c[i - 1] + c[i] * r[j];
      c[0] = c[0] * r[j];
    }
    return c;  // ascending: c[i] multiplies y^i, c[h] = 1
  };
  const std::vector<Real> co = expand(om2), cl = expand(lam2);
  Real bound;
  for (std::size_t i = 0; i < h; ++i) bound = max(bound, abs(B * (co[i] - cl[i]) + lead * co[i]) / abs(lead));
  bound += 1;

  // Sign scan: interlacing grid refined four ways, then geometric steps out to the bound.
  std::vector<Real> grid;
  for (std::size_t j = 0; j < h; ++j) {
    grid.push_back(-lam2[j]);
    grid.push_back(-om2[j]);
  }
  std::sort(grid.begin(), grid.end());
  std::vector<Real> pts;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    for (int q = 0; q < 4; ++q) pts.push_back(grid[i] + (grid[i + 1] - grid[i]) * Real(q) / 4);
  pts.push_back(grid.back());
  std::vector<Real> left_ext, right_ext;
  for (Real step = max(Real(1), abs(grid.front())); -grid.front() - step > -bound; step *= 2)
    left_ext.push_back(grid.front() - step);
  left_ext.push_back(-bound);
  std::reverse(left_ext.begin(), left_ext.end());
  for (Real step(Real(1) / 64); grid.back() + step < bound; step *= 2) right_ext.push_back(grid.back() + step);
  right_ext.push_back(bound);
  std::vector<Real> scan = left_ext;
  scan.insert(scan.end(), pts.begin(), pts.end());
  scan.insert(scan.end(), right_ext.begin(), right_ext.end());

  std::vector<Real> ys;
  Real prev_v = Preal(scan[0]);
  for (std::size_t i = 1; i < scan.size(); ++i) {
    Real v = Preal(scan[i]);
    if (v.is_zero()) {
      ys.push_back(scan[i]);
    } else if (!prev_v.is_zero() && v.sign() != prev_v.sign()) {
      ys.push_back(bisect_sign(Preal, scan[i - 1], scan[i], bits));
    }
    prev_v = v;
  }

  // Remaining roots by Durand-Kerner with the real roots held fixed.
  std::vector<Complex> roots;
  for (const Real& y : ys) roots.emplace_back(y);
  const std::size_t fixed = roots.size();
  if (fixed < h) {
    Real radius = sqrt(bound);
    Complex seed(Real(0.4), Real(0.9));
    Complex z = seed;
    for (std::size_t i = fixed; i < h; ++i) {
      roots.push_back(z * radius);
      z *= seed;
    }
    const Real tol = pow2(8 - bits);
    for (int it = 0; it < 2000; ++it) {
      Real worst;
      for (std::size_t i = fixed; i < h; ++i) {
        Complex den = lead;
        for (std::size_t j = 0; j < h; ++j)
          if (j != i) den *= roots[i] - roots[j];
        Complex delta = P(roots[i]) / den;
        roots[i] -= delta;
        worst = max(worst, abs(delta) / max(Real(1), abs(roots[i])));
      }
      if (worst < tol) break;
    }
  }

  std::vector<Real> omegas;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Complex& y = roots[i];
    if (i < fixed || abs(y.im) <= pow2(32 - bits) * max(Real(1), abs(y))) {
      omegas.push_back(-y.re);
    } else {
      out.complex_omega.push_back(-y);
    }
  }
  std::sort(omegas.begin(), omegas.end());
  out.complex_root_finding = !out.complex_omega.empty();
  for (const Real& v : omegas) {
    out.omega.values.push_back(rounded(v, base));
    out.omega.residuals.push_back(rounded(abs(Preal(-v)) / (B * max(Real(1), pow(abs(v), static_cast<long>(h)))), base));
  }
  out.omega.family = RootFamily::Omega;
  out.omega.m = m;
  for (Complex& z : out.complex_omega) z = Complex(rounded(z.re, base), rounded(z.im, base));

  if (!omegas.empty()) {
    out.omega1 = rounded(omegas.front(), base);
    out.omega1_negative = omegas.front() < 0;
    out.omega1_le_quarter = omegas.front() <= Real(-0.25);
  }
  if (!out.complex_root_finding && omegas.size() == h) {
    // -lambda_h^2 < -Omega_h < ... < -lambda_1^2 < -Omega_1, i.e. Omega_1 < lambda_1^2 < Omega_2 < ...
    bool ok = true;
    for (std::size_t j = 0; j < h && ok; ++j) {
      if (!(omegas[j] < lam2[j])) ok = false;
      if (j + 1 < h && !(lam2[j] < omegas[j + 1])) ok = false;
    }
    out.interlace84 = ok;
  }

  out.findings.push_back("chi(m+1) = " + out.chi_m1.to_string(12) + (out.chi_m1 < 0 ? " (negative)" : " (positive)"));
  if (out.omega1)
    out.findings.push_back("Omega_1 = " + out.omega1->to_string(12) +
                           (out.omega1_le_quarter ? " (<= -1/4)" : (out.omega1_negative ? " (negative, > -1/4)" : " (positive)")));
  if (out.complex_root_finding)
    out.findings.push_back(std::to_string(out.complex_omega.size()) + " non-real Omega values");
  out.findings.push_back(std::string("interlacing with -lambda^2: ") + (out.interlace84 ? "holds" : "fails"));
  return out;
}

SymReconstruction reconstruct_eta_sym(const Complex& s, std::size_t m, const PrecisionContext& ctx) {
  {
    WorkingScope scope(ctx);
    if (!(s.re > 0) || !(s.re < 1)) throw DomainError("reconstruct_eta_sym requires 0 < Re(s) < 1");
  }
  require_even(m, 8, "reconstruct_eta_sym");
  const PrecisionContext hi = family_context(m, ctx).raised(static_cast<long>(m) + 32);
  const ShiftVector d = d_shifts(m, hi);
  const LambdaOmega lo = lambda_omega(m, d, hi);
  const OmegaResult om = omega_caps(m, lo, hi);
  const Real c = chi(static_cast<unsigned long>(m + 1), hi);
  const Real w = half_gamma_weight(m, hi);

  SymReconstruction out;
  {
    EvalResult a = eta_ref(s, ctx), b = eta_ref(Real(1) - s, ctx);
    WorkingScope scope(ctx);
    out.reference = a.value + b.value;
  }
  Complex form_a, form_b;
  {
    WorkingScope scope(hi);
    const Real A = c / factorial(m + 1) + w;
    Complex h1(1), h2(1), d1(1), d2(1);
    for (std::size_t j = 0; j < m; ++j) {
      const Real jr(static_cast<unsigned long>(j));
      h1 *= Complex(jr + Real(2.5)) - s;
      h2 *= s + (jr + Real(1.5));
      d1 *= Complex(jr + 2 + d.d[j]) - s;
      d2 *= s + (jr + 1 + d.d[j]);
    }
    form_a = A * (d1 + d2) - w * (h1 + h2);

    Complex y = (s - Real(0.5)) * (s - Real(0.5));
    form_b = Complex(om.lead);
    for (const Real& v : om.omega.values) form_b *= y + v;
    for (const Complex& v : om.complex_omega) form_b *= y + v;
  }
  WorkingScope scope(ctx);
  auto pack = [&](const Complex& v, const char* id) {
    EvalResult r;
    r.value = Complex(rounded(v.re, ctx), rounded(v.im, ctx));
    r.terms_used = m;
    r.err_estimate = abs(r.value - out.reference);  // observed deviation from the oracle
    r.scheme_id = id;
    r.bits = ctx.bits();
    return r;
  };
  out.difference_form = pack(form_a, "sym-difference");
  out.product_form = pack(form_b, "sym-product");
  out.deviation_difference = out.difference_form.err_estimate;
  out.deviation_product = out.product_form.err_estimate;
  out.form_gap = abs(form_a - form_b);
  return out;
}

}  // namespace zetakit
