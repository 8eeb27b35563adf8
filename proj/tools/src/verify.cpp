#include <algorithm>
#include <cmath>
#include <random>

#include "commands.hpp"
#include "zetakit/chi.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/melzak.hpp"
#include "zetakit/primes.hpp"
#include "zetakit/roots.hpp"

namespace zetakit::cli {

namespace {

class CheckLog {
 public:
  CheckLog(std::string suite, const RunConfig& cfg, std::vector<Record>& out)
      : suite_(std::move(suite)), cfg_(cfg), out_(out) {}

  // Assertable check: value <= tolerance (or the given flag) must hold.
  void check(const std::string& name, bool ok, const std::string& value, const std::string& tol,
             const std::string& detail = "") {
    push(name, ok ? "pass" : "fail", value, tol, detail);
    (ok ? passed_ : failed_)++;
  }
  void below(const std::string& name, const Real& value, const Real& tol, const std::string& detail = "") {
    check(name, value <= tol, fmt(value, cfg_), fmt(tol, cfg_), detail);
  }
  // Printed, never fails the run.
  void finding(const std::string& name, const std::string& value, const std::string& detail = "") {
    push(name, "finding", value, "", detail);
    ++findings_;
  }

  void summary() {
    Record rec;
    rec["suite"] = suite_;
    rec["passed"] = passed_;
    rec["failed"] = failed_;
    rec["findings"] = findings_;
    rec["bits"] = cfg_.bits;
    rec["seed"] = cfg_.seed;
    out_.push_back(rec);
  }
  int failed() const { return failed_; }
  const RunConfig& cfg() const { return cfg_; }

 private:
  void push(const std::string& name, const char* status, const std::string& value, const std::string& tol,
            const std::string& detail) {
    Record rec;
    rec["suite"] = suite_;
    rec["check"] = name;
    rec["status"] = status;
    rec["value"] = value;
    rec["tolerance"] = tol;
    rec["detail"] = detail;
    rec["bits"] = cfg_.bits;
    rec["seed"] = cfg_.seed;
    out_.push_back(rec);
  }

  std::string suite_;
  const RunConfig& cfg_;
  std::vector<Record>& out_;
  int passed_ = 0;
  int failed_ = 0;
  int findings_ = 0;
};

std::string str(const Complex& z, int digits = 6) { return z.re.to_string(digits) + "," + z.im.to_string(digits); }

void suite_functional_eq(CheckLog& log, std::mt19937_64& rng) {
  const PrecisionContext ctx = log.cfg().context();
  std::uniform_real_distribution<double> re(0.1, 0.9), im(-10.0, 10.0);
  const Real tol(1e-12);
  Real worst;
  for (int i = 0; i < 20; ++i) {
    const double a = re(rng), b = im(rng);
    Complex s{Real(a), Real(b)};
    Real r = functional_eq_residual(s, ctx);
    worst = max(worst, r);
    log.below("functional-eq s=" + str(s), r, tol);
  }
  log.finding("functional-eq max residual", fmt(worst, log.cfg()));

  {
    Complex s(Real(0.3), Real(1));
    Complex k = kappa_prefactor(s, ctx);
    EvalResult z = zeta_ref(s, ctx), e1 = eta_ref(s, ctx), e2 = eta_ref(Real(1) - s, ctx);
    WorkingScope scope(ctx);
    log.below("kappa*zeta = eta(s)+eta(1-s) at s=0.3+1i", abs(k * z.value - e1.value - e2.value), Real(1e-15));
  }

  // Norm ratios of the odd-integer sums: reported only.
  PrimeList primes(4);
  struct Pt {
    Complex s;
    std::size_t n;
  };
  for (const Pt& p : {Pt{Complex(Real(0.5)), 1000}, Pt{Complex(Real(0.3)), 1000}, Pt{Complex(Real(0.3)), 10000},
                      Pt{Complex(Real(0.5), Real(14.1347)), 10000}}) {
    Real lhs = norm_ratio15(p.s, 1, p.n, primes, ctx);
    Real rhs = norm_ratio15_rhs(p.s, p.n, ctx);
    log.finding("norm ratio k=1 s=" + str(p.s) + " n=" + std::to_string(p.n), fmt(lhs, log.cfg()),
                "rhs " + rhs.to_string(12));
  }
}

void suite_chi(CheckLog& log) {
  const PrecisionContext ctx = log.cfg().context();
  {
    ChiValue c1 = chi_value(1, ctx);
    Real e2 = eta_integer(2, ctx);
    WorkingScope scope(ctx);
    log.below("chi(1) = eta(2) - 1", abs(c1.value - (e2 - 1)), c1.tail_bound + pow2(8 - ctx.bits()));
  }
  ChiTable table(256, ctx);
  {
    WorkingScope scope(ctx);
    Real sum64, sum256;
    for (unsigned long n = 1; n <= 256; ++n) {
      sum256 += table.value(n) / Real(n);
      if (n == 64) sum64 = sum256;
    }
    const Real target = const_ln2() - 1;
    log.finding("sum chi(n)/n - (ln2 - 1), n <= 64", fmt(abs(sum64 - target), log.cfg()));
    log.finding("sum chi(n)/n - (ln2 - 1), n <= 256", fmt(abs(sum256 - target), log.cfg()));
    log.finding("C in |chi(n)| <= C/n, 64 <= n <= 256", fmt(table.decay_constant(), log.cfg()));
  }
  Real c = chi(10000, ctx);
  log.below("|chi(10^4)| < 1e-2", abs(c), Real(1e-2), c < 0 ? "negative" : "positive");
}

void suite_melzak(CheckLog& log, std::mt19937_64& rng) {
  const RunConfig& cfg = log.cfg();
  const PrecisionContext ctx = cfg.context();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Real rel = pow2(8 - cfg.bits);

  auto rel_gap = [&](const std::pair<Complex, Complex>& lr) {
    WorkingScope scope(ctx);
    Real scale = max(abs(lr.first), abs(lr.second));
    if (scale.is_zero()) return Real(0);
    return abs(lr.first - lr.second) / scale;
  };
  for (std::size_t m = 1; m <= 12; ++m) {
    const double a = u(rng), b = u(rng);
    Complex y(Real(3 * a), Real(0.5 + std::abs(b)));
    log.below("identity62 m=" + std::to_string(m), rel_gap(identity62(m, y, ctx)), rel);
  }
  for (std::size_t m = 1; m <= 12; ++m) {
    double r[6];
    for (double& v : r) v = u(rng);
    Complex beta(Real(0.5 + 0.4 * r[0]), Real(0.3 * r[1]));
    Complex gam(Real(1.5 + r[2]));
    Complex s(Real(0.5 + 0.4 * r[3]), Real(3 * r[4] + (r[5] < 0 ? -0.5 : 0.5)));
    log.below("identity64 m=" + std::to_string(m), rel_gap(identity64(m, beta, gam, s, ctx)), rel);
  }
  for (std::size_t m = 2; m <= 20; m += 2) {
    EpsilonVector ev = epsilon_coeffs(m, ctx);
    Real closed = epsilon_sum_closed_form(m, ctx);
    WorkingScope scope(ctx);
    Real sum;
    for (const Real& e : ev.eps) sum += e;
    log.below("epsilon sum closed form m=" + std::to_string(m), abs(sum - closed) / abs(closed), rel);
  }
  {
    std::size_t bad = 0, first_bad = 0;
    for (std::size_t m = 2; m <= 64; m += 2) {
      EpsilonVector ev = epsilon_coeffs(m, ctx);
      for (const Real& e : ev.eps)
        if (!(e > 0)) {
          if (!bad) first_bad = m;
          ++bad;
        }
    }
    log.check("epsilon_k > 0 for even m <= 64", bad == 0, std::to_string(bad), "0",
              bad ? "first failing m = " + std::to_string(first_bad) : "");
  }
  {
    Real worst;
    std::uniform_int_distribution<int> deg(0, 16);
    for (int t = 0; t < 100; ++t) {
      const std::size_t m = static_cast<std::size_t>(deg(rng));
      std::uniform_int_distribution<int> dd(0, static_cast<int>(m));
      const std::size_t d = static_cast<std::size_t>(dd(rng));
      std::vector<Complex> c;
      for (std::size_t i = 0; i <= d; ++i) {
        const double a = u(rng), b = u(rng);
        c.emplace_back(Real(a), Real(b));
      }
      if (c.back().re.is_zero() && c.back().im.is_zero()) c.back() = Complex(1);
      Polynomial f(c);
      double r[4];
      for (double& v : r) v = u(rng);
      Complex x(Real(2 * r[0]), Real(r[1]));
      Complex y(Real(static_cast<double>(m) * 0.5 + r[2]), Real(0.25 + std::abs(r[3])));
      Complex got = melzak_transform(f, x, y, ctx, m);
      WorkingScope scope(ctx);
      Complex want = f(x - y);
      Real radius = abs(x) + abs(y) + Real(static_cast<unsigned long>(m)) + 1;
      Real scale, p(1);
      for (const Complex& ci : c) {
        scale += abs(ci) * p;
        p *= radius;
      }
      worst = max(worst, abs(got - want) / scale);
    }
    log.below("melzak transform exact, 100 random polynomials deg <= m <= 16", worst, pow2(6 - cfg.bits));
  }
}

void suite_interlace(CheckLog& log, const std::vector<std::size_t>& ms) {
  const RunConfig& cfg = log.cfg();
  const PrecisionContext ctx = cfg.context();
  for (std::size_t m : ms) {
    const std::string tag = " m=" + std::to_string(m);
    ShiftVector d = d_shifts(m, ctx);
    std::string flags;
    for (bool b : d.parity_ok) flags.push_back(b ? '1' : '0');
    log.check("d_j in (0,1)" + tag, d.all_in_unit, d.all_in_unit ? "true" : "false", "true");
    log.check("d_j parity pattern" + tag, d.ordering_ok, flags, std::string(m, '1'),
              d.findings.empty() ? "" : d.findings.front());
    LambdaOmega lo = lambda_omega(m, d, ctx);
    log.check("strict lambda^2/omega^2 interlacing" + tag, lo.interlace.strict, lo.interlace.pattern, "alternating",
              "min_gap " + lo.interlace.min_gap.to_string(6) + ", first break at " +
                  std::to_string(lo.interlace.first_break));
    if (m >= 8) {
      OmegaResult om = omega_caps(m, lo, ctx);
      log.finding("Omega_1" + tag, om.omega1 ? fmt(*om.omega1, cfg) : "none",
                  om.omega1_le_quarter ? "<= -1/4" : (om.omega1_negative ? "negative, > -1/4" : "not negative"));
      log.finding("non-real Omega" + tag, std::to_string(om.complex_omega.size()));
      log.finding("chi(m+1)" + tag, fmt(om.chi_m1, cfg));
      log.finding("Omega / -lambda^2 interlacing" + tag, om.interlace84 ? "holds" : "fails");
    }
  }
}

void suite_reconstruct(CheckLog& log) {
  const RunConfig& cfg = log.cfg();
  const PrecisionContext ctx = cfg.context();
  const Complex s(Real(0.3), Real(3));
  Real prev;
  bool have_prev = false;
  for (std::size_t m : {8, 16, 24}) {
    const std::string tag = " m=" + std::to_string(m);
    SymReconstruction r = reconstruct_eta_sym(s, m, ctx);
    log.finding("deviation from eta(s)+eta(1-s) at s=0.3+3i" + tag, fmt(r.deviation_difference, cfg));
    Real scale;
    {
      WorkingScope scope(ctx);
      scale = max(Real(1), abs(r.difference_form.value));
    }
    log.below("difference and product forms agree" + tag, r.form_gap, pow2(16 - cfg.bits) * scale);
    if (have_prev)
      log.check("deviation decreases" + tag, r.deviation_difference < prev, fmt(r.deviation_difference, cfg),
                "< " + fmt(prev, cfg));
    prev = r.deviation_difference;
    have_prev = true;
  }
  {
    const Complex half(Real(0.5));
    for (std::size_t m : {8, 16, 24}) {
      SymReconstruction r = reconstruct_eta_sym(half, m, ctx);
      log.finding("deviation from 2 eta(1/2) m=" + std::to_string(m), fmt(r.deviation_product, cfg));
    }
  }
  {
    const Complex s2(Real(0.4), Real(1));
    EvalResult a = eta_ref(s2, ctx), b = eta_ref(Real(1) - s2, ctx);
    Real prev2;
    bool have = false;
    for (std::size_t m : {8, 16, 24}) {
      ThetaPhi tp = theta_phi_roots(m, ctx);
      Complex v = theta_phi_reconstruct(tp, s2, ctx);
      WorkingScope scope(ctx);
      Real dev = abs(v - a.value - b.value);
      if (have)
        log.check("theta/phi reconstruction improves m=" + std::to_string(m), dev < prev2, fmt(dev, cfg),
                  "< " + fmt(prev2, cfg));
      else
        log.finding("theta/phi reconstruction deviation m=8", fmt(dev, cfg));
      prev2 = dev;
      have = true;
    }
  }
  for (std::size_t m : {8, 16, 24}) {
    OmegaResult om = omega_caps(m, ctx);
    log.finding("Omega_1 m=" + std::to_string(m), om.omega1 ? fmt(*om.omega1, cfg) : "none",
                om.omega1_le_quarter ? "<= -1/4" : (om.omega1_negative ? "negative, > -1/4" : "not negative"));
  }
}

}  // namespace

CommandResult cmd_verify(const VerifyArgs& a, const RunConfig& cfg) {
  static const std::vector<std::string> kSuites = {"functional-eq", "chi", "melzak", "interlace", "reconstruct"};
  std::vector<std::string> run;
  if (a.suite == "all")
    run = kSuites;
  else if (std::find(kSuites.begin(), kSuites.end(), a.suite) != kSuites.end())
    run = {a.suite};
  else
    throw UsageError("unknown suite '" + a.suite + "' (functional-eq, chi, melzak, interlace, reconstruct, all)");
  std::vector<std::size_t> ms = {8, 16, 32, 64};
  if (a.m) {
    if (*a.m < 4 || *a.m % 2 != 0) throw UsageError("--m must be even and >= 4");
    ms = {*a.m};
  }

  CommandResult out;
  std::mt19937_64 rng(cfg.seed);
  for (const std::string& name : run) {
    CheckLog log(name, cfg, out.records);
    if (name == "functional-eq") suite_functional_eq(log, rng);
    if (name == "chi") suite_chi(log);
    if (name == "melzak") suite_melzak(log, rng);
    if (name == "interlace") suite_interlace(log, ms);
    if (name == "reconstruct") suite_reconstruct(log);
    log.summary();
    if (log.failed()) out.exit_code = kExitCheckFailed;
  }
  return out;
}

}  // namespace zetakit::cli
