// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/poly_oracle.hpp"
#include "zetakit/chi.hpp"
#include "zetakit/melzak.hpp"
#include "zetakit/reference.hpp"
#include "zetakit/roots.hpp"
#include "zetakit/schemes.hpp"

#ifdef ZETAKIT_HAVE_CLI
#include "json.hpp"
#include "zetakit/cli/app.hpp"
#endif

using namespace zetakit;

namespace {

const PrecisionContext kCtx(256);
int g_failed = 0;

std::string sci(const Real& x, int digits = 4) { return x.to_string(digits); }
std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

void report(const std::string& id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s %-3s %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

// Runs one criterion; a thrown library error counts as FAIL.
void criterion(const std::string& id, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("threw: ") + e.what();
  }
  report(id, ok, what, detail);
}

Real R(const char* text) {
  PrecisionScope scope(600);
  return Real::parse(text);
}

Complex C(const char* re, const char* im) { return Complex(R(re), R(im)); }

Real dist(const Complex& a, const Complex& b) {
  PrecisionScope scope(600);
  return abs(a - b);
}

Complex to_zeta(const Complex& eta, const Complex& s) {
  PrecisionScope scope(600);
  return eta / (Real(1) - pow(Real(2), Real(1) - s));
}

Real rel_gap(const std::pair<Complex, Complex>& p) {
  PrecisionScope scope(600);
  Real scale = max(abs(p.first), abs(p.second));
  return scale.is_zero() ? Real(0) : abs(p.first - p.second) / scale;
}

// Least-squares slope of ly against lx.
double fit_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<std::size_t> log_grid(double lo, double hi, int points) {
  std::vector<std::size_t> out;
  for (int i = 0; i < points; ++i)
    out.push_back(static_cast<std::size_t>(std::llround(lo * std::pow(hi / lo, i / double(points - 1)))));
  return out;
}

bool close(const Complex& got, const Complex& want, double tol, std::string& detail) {
  Real d = dist(got, want);
  detail = "got " + to_string(got, 12) + ", want " + to_string(want, 10) + ", |diff| " + sci(d) + ", tol " + sci(tol);
  return d < Real(tol);
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const Complex s0 = C("0.2", "2");
  const auto t_first = clock::now();

  // ---- 1. value reproduction --------------------------------------------
  criterion("1a", "melzak29(1/2, m=32) as zeta vs -1.46034778", [&](std::string& d) {
    Complex half(Real(0.5));
    Complex z = to_zeta(eta_melzak29(half, 32, kCtx).value, half);
    return close(z, Complex(R("-1.46034778")), 5e-8, d);
  });
  criterion("1b", "via66(0.2+2i, m=20) vs 0.70082616+0.43532002i", [&](std::string& d) {
    return close(eta_via66(s0, 20, kCtx).value, C("0.70082616", "0.43532002"), 5e-8, d);
  });
  criterion("1c", "benchmark table at 0.2+2i (dirichlet 10^6, fast31 k=2 10^4, combined37 15/25/45)",
            [&](std::string& d) {
              std::string a, b, c;
              bool ok = close(dirichlet_partial(s0, 1000000, kCtx).value, C("0.37471336", "-0.27518432"), 1e-7, a);
              ok &= close(fast_scheme31(s0, 2, 10000, kCtx).value, C("0.36010325", "-0.26624621"), 1e-7, b);
              ok &= close(combined_scheme37(s0, {2, 3, 5}, 6, {15, 25, 45}, kCtx).value, C("0.36010259", "-0.26624619"),
                          1e-7, c);
              d = "dirichlet " + a + "; fast31 " + b + "; combined37 " + c;
              return ok;
            });
  criterion("1d", "eta_ref(0.2+2i) vs 0.70077353+0.43513124i", [&](std::string& d) {
    return close(eta_ref(s0, kCtx).value, C("0.70077353", "0.43513124"), 1e-8, d);
  });
  criterion("1e", "zeta_ref(0.2+2i) vs 0.36010259-0.26624620i", [&](std::string& d) {
    return close(zeta_ref(s0, kCtx).value, C("0.36010259", "-0.26624620"), 1e-8, d);
  });
  {
    const double secs = std::chrono::duration<double>(clock::now() - t_first).count();
    report("1f", secs < 300, "criterion 1 runtime at 256 bits under 5 min", sci(secs) + " s");
  }

  // ---- 2. closed-form roots ---------------------------------------------
  criterion("2", "sym_roots on {2,3}, {2,3,4}, {2,3,4,5} vs closed forms", [&](std::string& d) {
    auto nodes = [](std::initializer_list<int> v) {
      SymmetrizedFactorial f;
      for (int a : v) f.nodes.emplace_back(a);
      return f;
    };
    std::vector<Real> got, want;
    for (const Real& r : sym_roots(nodes({2, 3}), kCtx).values) got.push_back(r);
    for (const Real& r : sym_roots(nodes({2, 3, 4}), kCtx).values) got.push_back(r);
    for (const Real& r : sym_roots(nodes({2, 3, 4, 5}), kCtx).values) got.push_back(r);
    {
      PrecisionScope p(600);
      want = {sqrt(Real(15)) / 2, sqrt(Real(7)) / 2, sqrt(Real(103) - 8 * sqrt(Real(151))) / 2,
              sqrt(Real(103) + 8 * sqrt(Real(151))) / 2};
    }
    if (got.size() != want.size()) {
      d = "root count " + std::to_string(got.size());
      return false;
    }
    Real worst;
    for (std::size_t i = 0; i < got.size(); ++i) worst = max(worst, abs(got[i] - want[i]));
    d = "max |diff| " + sci(worst) + ", tol 1e-12";
    return worst < Real(1e-12);
  });

  // ---- 3. identity suites -----------------------------------------------
  criterion("3a", "identity62/64 (m <= 12, random) and epsilon sum closed form, rel < 2^(8-bits)", [&](std::string& d) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Real w62, w64, w67;
    for (std::size_t m = 1; m <= 12; ++m) {
      for (int t = 0; t < 5; ++t) {
        const double y0 = 6 * u(rng), y1 = 2 * u(rng), b0 = 0.5 + 0.45 * u(rng), b1 = u(rng);
        const double g0 = 2 * u(rng), r0 = 0.5 + 0.4 * u(rng), r1 = 5 * u(rng);
        w62 = max(w62, rel_gap(identity62(m, Complex{Real(y0), Real(y1)}, kCtx)));
        w64 = max(w64, rel_gap(identity64(m, Complex{Real(b0), Real(b1)}, Complex{Real(g0)},
                                          Complex{Real(r0), Real(r1)}, kCtx)));
      }
      if (m % 2 == 0) {
        EpsilonVector e = epsilon_coeffs(m, kCtx);
        Real closed = epsilon_sum_closed_form(m, kCtx);
        PrecisionScope p(600);
        Real sum;
        for (const Real& v : e.eps) sum += v;
        w67 = max(w67, abs(sum - closed) / abs(closed));
      }
    }
    const Real tol = pow2(8 - kCtx.bits());
    d = "max rel 62 " + sci(w62) + ", 64 " + sci(w64) + ", eps-sum " + sci(w67) + ", tol " + sci(tol);
    return w62 < tol && w64 < tol && w67 < tol;
  });
  criterion("3b", "melzak transform exact on 100 random polynomials, deg <= m <= 16", [&](std::string& d) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(0, 16);
    Real worst;
    for (int trial = 0; trial < 100; ++trial) {
      const int dg = deg(rng);
      std::uniform_int_distribution<int> mm(dg, 16);
      const std::size_t m = static_cast<std::size_t>(mm(rng));
      std::vector<Complex> c;
      for (int i = 0; i <= dg; ++i) {
        const double a = u(rng), b = u(rng);
        c.emplace_back(Real(a), Real(b));
      }
      const double xr = 3 * u(rng), xi = 3 * u(rng), yr = 8 * u(rng) + 8, yi = u(rng);
      Complex x{Real(xr), Real(xi)}, y{Real(yr), Real(yi)};
      Complex got = melzak_transform(Polynomial(c), x, y, kCtx, m);
      PrecisionScope p(600);
      Complex want, t = x - y;
      Real scale, pw(1), reach = abs(x) + Real(static_cast<unsigned long>(m)) + 1;
      for (std::size_t i = c.size(); i-- > 0;) want = want * t + c[i];
      for (const Complex& ci : c) {
        scale += abs(ci) * pw;
        pw *= reach;
      }
      worst = max(worst, abs(got - want) / scale);
    }
    const Real tol = pow2(6 - kCtx.bits());
    d = "max |diff|/scale " + sci(worst) + ", tol " + sci(tol);
    return worst < tol;
  });

  // ---- 4. property suites -----------------------------------------------
  criterion("4a", "200 random symmetrized/combined instances, oracle roots |Re - 1/2| < 1e-10", [&](std::string& d) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> count(2, 12), kind(0, 3);
    std::uniform_real_distribution<double> off(0.0, 6.0), cw(0.05, 3.0);
    Real worst_re, worst_match;
    int mismatched = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = count(rng);
      const bool combined = trial % 4 == 3 && n >= 3;
      const bool mirrored = trial % 2 == 1 && !combined;
      std::vector<Real> nodes, c;
      for (int j = 0; j < n; ++j) {
        const int k = kind(rng);
        const double o = off(rng), w = cw(rng);
        double delta = o + 0.05;
        if (k == 0 && !combined) delta = 1e-3 * (o + 0.1);  // near-1/2 node
        if (k == 1 && j > 0) delta = std::abs(nodes.back().to_double() - 0.5);  // repeated node
        nodes.emplace_back(mirrored ? 0.5 - delta : 0.5 + delta);
        c.emplace_back(w);
      }
      oracle::Poly p;
      RootList lib;
      if (combined) {
        lib = combined_roots(c, nodes, kCtx);
        PrecisionScope hp(320);
        for (int k = 0; k < n; ++k) p = oracle::add(p, oracle::symmetrized(nodes, static_cast<std::size_t>(k)), c[k]);
      } else {
        lib = sym_roots({nodes}, kCtx);
        PrecisionScope hp(320);
        p = oracle::symmetrized(nodes);
      }
      PrecisionScope hp(320);
      std::vector<Real> im;
      for (const Complex& z : oracle::roots(oracle::trim(p, pow2(-280)))) {
        worst_re = max(worst_re, abs(z.re - Real(0.5)));
        if (z.im > 0) im.push_back(z.im);
      }
      std::sort(im.begin(), im.end());
      if (im.size() != lib.values.size()) {
        ++mismatched;
        continue;
      }
      for (std::size_t i = 0; i < im.size(); ++i) worst_match = max(worst_match, abs(im[i] - lib.values[i]));
    }
    d = "max |Re - 1/2| " + sci(worst_re) + ", max |oracle - solver| " + sci(worst_match) + ", count mismatches " +
        std::to_string(mismatched);
    return worst_re < Real(1e-10) && worst_match < Real(1e-10) && mismatched == 0;
  });
  criterion("4b", "strict lambda^2/omega^2 interlacing at m = 8, 16, 32, 64", [&](std::string& d) {
    bool ok = true;
    for (std::size_t m : {8u, 16u, 32u, 64u}) {
      const PrecisionContext fam = family_context(m, kCtx);
      LambdaOmega lo = lambda_omega(m, d_shifts(m, fam), fam);
      d += "m=" + std::to_string(m) + " " + lo.interlace.pattern.substr(0, 16) +
           (lo.interlace.pattern.size() > 16 ? "..." : "") + (lo.interlace.strict ? " strict; " : " not strict; ");
      ok &= lo.interlace.strict;
    }
    return ok;
  });
  criterion("4c", "product correlation of combined roots, m <= 8, rel < 1e-12", [&](std::string& d) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> off(0.2, 4.0), cw(0.1, 2.0);
    Real worst;
    for (std::size_t m : {2u, 4u, 6u, 8u}) {
      for (int t = 0; t < 5; ++t) {
        std::vector<Real> nodes, c;
        for (std::size_t j = 0; j <= m; ++j) {
          const double o = off(rng), w = cw(rng);
          nodes.emplace_back(0.5 + o);
          c.emplace_back(w);
        }
        RootList T = combined_roots(c, nodes, kCtx);
        std::vector<Real> tau_prod;
        for (std::size_t k = 0; k <= m; ++k) {
          SymmetrizedFactorial f;
          for (std::size_t j = 0; j <= m; ++j)
            if (j != k) f.nodes.push_back(nodes[j]);
          RootList tau = sym_roots(f, kCtx);
          PrecisionScope p(400);
          Real pr(1);
          for (const Real& v : tau.values) pr *= v * v;
          tau_prod.push_back(pr);
        }
        PrecisionScope p(400);
        Real lhs(1), num, den;
        for (const Real& v : T.values) lhs *= v * v;
        for (std::size_t k = 0; k <= m; ++k) {
          num += c[k] * tau_prod[k];
          den += c[k];
        }
        worst = max(worst, abs(lhs - num / den) / lhs);
      }
    }
    d = "max rel " + sci(worst) + ", tol 1e-12";
    return worst < Real(1e-12);
  });
  criterion("4d", "d_j parity pattern 0 < d_odd < 1/2 < d_even < 1 for even m <= 64", [&](std::string& d) {
    std::vector<std::string> bad;
    for (std::size_t m = 4; m <= 64; m += 2) {
      ShiftVector v = d_shifts(m, family_context(m, kCtx));
      if (!v.ordering_ok || !v.all_in_unit) bad.push_back(std::to_string(m));
    }
    d = bad.empty() ? "all m hold" : "violations at m =";
    for (const auto& b : bad) d += " " + b;
    return bad.empty();
  });
  criterion("4e", "functional-equation residual < 1e-12 at 20 strip points", [&](std::string& d) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> re(0.1, 0.9), im(-10.0, 10.0);
    Real worst;
    for (int i = 0; i < 20; ++i) {
      const double a = re(rng), b = im(rng);
      worst = max(worst, functional_eq_residual(Complex{Real(a), Real(b)}, kCtx));
    }
    d = "max residual " + sci(worst);
    return worst < Real(1e-12);
  });
  criterion("4f", "no sign change of real zeta on (0,1) and on (1,30], 1000 samples", [&](std::string& d) {
    const PrecisionContext ctx(128);
    int left_bad = 0, right_bad = 0;
    Real smallest(1e9);
    for (int i = 1; i <= 1000; ++i) {
      Real s;
      {
        WorkingScope w(ctx);
        s = Real(30) * Real(i) / Real(1000);
      }
      Real z = zeta_ref(Complex(s), ctx).value.re;
      smallest = min(smallest, abs(z));
      if (s < Real(1))
        left_bad += !(z < 0);
      else
        right_bad += !(z > 0);
    }
    d = "sign violations left " + std::to_string(left_bad) + ", right " + std::to_string(right_bad) + ", min |zeta| " +
        sci(smallest);
    return left_bad == 0 && right_bad == 0 && smallest > ctx.sqrt_eps();
  });

  // ---- 5. convergence trends --------------------------------------------
  criterion("5a", "binomial16 term log-log slope -(1+Re s) +- 0.15 over n in [1e3, 1e4], s = 0.2+2i", [&](std::string& d) {
    // fit on logs, |t| can sit below double range
    std::vector<double> lx, ly;
    for (std::size_t n : log_grid(1000, 10000, 7)) {
      PrecisionScope p(300);
      Real a = abs(binomial_term_chi(s0, n, kCtx));
      lx.push_back(std::log(static_cast<double>(n)));
      ly.push_back(log(a).to_double());
    }
    const double slope = fit_slope(lx, ly);
    d = "fitted slope " + sci(slope) + ", want -1.2 +- 0.15";
    return std::abs(slope + 1.2) <= 0.15;
  });
  criterion("5b", "fast31 k=2 error slope -(1+2 Re s) +- 0.15 over a decade, s = 0.2+2i", [&](std::string& d) {
    Complex z = zeta_ref(s0, kCtx).value;
    std::vector<double> xs, ys;
    for (std::size_t n : log_grid(1000, 10000, 9)) {
      Real e = dist(fast_scheme31(s0, 2, n, kCtx).value, z);
      xs.push_back(std::log(3.0 * static_cast<double>(n)));
      ys.push_back(log(e).to_double());
    }
    const double slope = fit_slope(xs, ys);
    d = "fitted slope " + sci(slope) + ", want -1.4 +- 0.15";
    return std::abs(slope + 1.4) <= 0.15;
  });
  criterion("5c", "reconstruct_eta_sym deviation decreases over m = 8, 16, 24 at s = 0.3+3i", [&](std::string& d) {
    Complex s = C("0.3", "3");
    std::vector<Real> dev;
    for (std::size_t m : {8u, 16u, 24u}) dev.push_back(reconstruct_eta_sym(s, m, kCtx).deviation_difference);
    d = "deviations " + sci(dev[0]) + ", " + sci(dev[1]) + ", " + sci(dev[2]);
    return dev[1] < dev[0] && dev[2] < dev[1];
  });

  // ---- 6. reported findings ---------------------------------------------
#ifdef ZETAKIT_HAVE_CLI
  criterion("6", "Omega_1 and norm-ratio findings printed by verify without failing the run", [&](std::string& d) {
    using nlohmann::json;
    auto suite = [](const std::string& name, int& code) {
      std::ostringstream out, err;
      code = cli::run({"verify", "--suite", name}, out, err);
      std::vector<json> recs;
      std::istringstream in(out.str());
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) recs.push_back(json::parse(line));
      return recs;
    };
    int code_fe = 0, code_rc = 0, code_il = 0;
    auto fe = suite("functional-eq", code_fe);
    auto rc = suite("reconstruct", code_rc);
    auto il = suite("interlace", code_il);
    auto count = [](const std::vector<json>& recs, const std::string& prefix, const char* status) {
      int n = 0;
      for (const json& j : recs)
        if (j.contains("status") && j["status"] == status && j["check"].get<std::string>().rfind(prefix, 0) == 0) ++n;
      return n;
    };
    const int ratio = count(fe, "norm ratio", "finding");
    const int omega_rc = count(rc, "Omega_1", "finding");
    const int omega_il = count(il, "Omega_1", "finding");
    // interlace fails only on its strict-interlacing checks, never on a finding
    int other_fail = 0;
    for (const json& j : il)
      if (j.contains("status") && j["status"] == "fail" &&
          j["check"].get<std::string>().rfind("strict lambda^2/omega^2 interlacing", 0) != 0)
        ++other_fail;
    d = "norm-ratio findings " + std::to_string(ratio) + " (exit " + std::to_string(code_fe) + "), Omega_1 findings " +
        std::to_string(omega_rc) + " (exit " + std::to_string(code_rc) + ") + " + std::to_string(omega_il) +
        " in interlace, non-interlacing failures " + std::to_string(other_fail);
    return code_fe == 0 && code_rc == 0 && ratio > 0 && omega_rc > 0 && omega_il > 0 && other_fail == 0;
  });
#else
  report("6", false, "findings reported by verify", "CLI not built");
#endif

  const double total = std::chrono::duration<double>(clock::now() - t_first).count();
  std::printf("%d criteria failed; total %.1f s\n", g_failed, total);
  return g_failed == 0 ? 0 : 1;
}
