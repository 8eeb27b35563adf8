#include "zetakit/schemes.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <mutex>
#include <numbers>
#include <set>
#include <string>

#include "zetakit/errors.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/reduce.hpp"

namespace zetakit {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

long log2_ceil(std::size_t n) { return static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 1))); }

Complex rounded(const Complex& z, const PrecisionContext& ctx) {
  return Complex(rounded(z.re, ctx), rounded(z.im, ctx));
}

EvalResult make_result(const Complex& value, std::size_t terms, const Real& err, std::string id,
                       const PrecisionContext& ctx) {
  WorkingScope scope(ctx);
  EvalResult r;
  r.value = rounded(value, ctx);
  r.terms_used = terms;
  r.err_estimate = err + Real(0);
  r.scheme_id = std::move(id);
  r.bits = ctx.bits();
  return r;
}

void require_right_half(const Complex& s, const char* who) {
  if (!(s.re > 0)) throw DomainError(std::string(who) + " requires Re(s) > 0");
}

Real rounding_floor(long bits, std::size_t terms) { return pow2(-bits) * Real(static_cast<unsigned long>(terms + 16)); }

// Tail estimate for series whose terms are O(n^(-1-sigma)): the largest
// |term_n| n^(1+sigma) over the last tenth of the sum, integrated past N.
class PowerTail {
 public:
  PowerTail(std::size_t n_max, const Real& sigma) : start_(n_max - n_max / 10), n_max_(n_max), sigma_(sigma) {}
  void add(std::size_t n, const Real& magnitude) {
    if (n < start_) return;
    envelope_ = max(envelope_, magnitude * pow(Real(static_cast<unsigned long>(n)), sigma_ + 1));
  }
  Real bound() const { return envelope_ * pow(Real(static_cast<unsigned long>(n_max_)), -sigma_) / sigma_; }

 private:
  std::size_t start_;
  std::size_t n_max_;
  Real sigma_;
  Real envelope_;
};

// B_{2k}/(2k) for k = 1..count, exact then rounded at the current precision.
std::vector<Real> bernoulli_over_index(std::size_t count) {
  static std::mutex mu;
  static std::vector<cpp_rational> b{cpp_rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  const std::size_t need = 2 * count + 1;
  while (b.size() < need) {
    const std::size_t m = b.size();
    cpp_rational acc = 0;
    cpp_int binom = 1;  // C(m+1, j)
    for (std::size_t j = 0; j < m; ++j) {
      acc += cpp_rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b.push_back(-acc / cpp_rational(m + 1));
  }
  std::vector<Real> out;
  for (std::size_t k = 1; k <= count; ++k) {
    const cpp_rational& v = b[2 * k];
    Real r = Real::parse(boost::multiprecision::numerator(v).str()) /
             Real::parse(boost::multiprecision::denominator(v).str());
    out.push_back(r / Real(static_cast<unsigned long>(2 * k)));
  }
  return out;
}

}  // namespace

Real eta_integer(unsigned long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("eta_integer requires k >= 1");
  if (k == 1) {
    WorkingScope scope(ctx);
    return const_ln2();
  }
  return eta_ref(Complex(Real(k)), ctx).value.re;
}

EvalResult dirichlet_partial(const Complex& s, std::size_t N, const PrecisionContext& ctx) {
  require_right_half(s, "dirichlet_partial");
  if (N < 1) throw DomainError("dirichlet_partial requires N >= 1");
  Complex denom = eta_zeta_denominator(s, ctx);
  const long w = ctx.working_bits() + log2_ceil(N) + 8;
  Complex sum = blocked_sum(
      1, N + 1,
      [&s](std::size_t lo, std::size_t hi) {
        Complex acc;
        for (std::size_t n = lo; n < hi; ++n) {
          if (n % 2 == 1)
            acc += inv_pow(n, s);
          else
            acc -= inv_pow(n, s);
        }
        return acc;
      },
      w);
  WorkingScope scope(ctx);
  Real err = (1 + abs(s) / s.re) * pow(Real(static_cast<unsigned long>(N + 1)), -s.re) / abs(denom);
  return make_result(sum / denom, N, err + rounding_floor(ctx.working_bits(), N), "dirichlet", ctx);
}

// ---- binomial expansions ----------------------------------------------

EvalResult eta_binomial16(const Complex& s, const ChiTable& table, std::size_t n_max) {
  require_right_half(s, "eta_binomial16");
  if (n_max < 1) throw DomainError("eta_binomial16 requires n_max >= 1");
  if (n_max > table.n_max()) throw DomainError("eta_binomial16: n_max exceeds the chi table");
  const PrecisionContext& ctx = table.context();
  const long w = ctx.working_bits() + log2_ceil(n_max) + 8;
  PrecisionScope scope(w);
  Complex r(1);  // (n-s)!/(n!(1-s)!)
  Complex sum(1);
  Real chi_err;
  PowerTail tail(n_max, s.re);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const unsigned long nl = static_cast<unsigned long>(n);
    if (n > 1) r = r * (Complex(Real(nl)) - s) / Real(nl);
    Complex term = r * table.value(nl);
    sum += term;
    chi_err += abs(r) * table.tail_bound(nl);
    tail.add(n, abs(term));
  }
  Real err = tail.bound() + chi_err + rounding_floor(w, n_max);
  return make_result(sum, n_max, err, "binomial16", ctx);
}

EvalResult eta_binomial16(const Complex& s, std::size_t n_max, const PrecisionContext& ctx) {
  require_right_half(s, "eta_binomial16");
  ChiTable table(static_cast<unsigned long>(n_max), ctx);
  return eta_binomial16(s, table, n_max);
}

Complex binomial_term_chi(const Complex& s, unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("term index must be >= 1");
  Real c = chi(n, ctx.raised(16));
  PrecisionContext hi = ctx.raised(16);
  WorkingScope scope(hi);
  if (n == 1) return rounded(Complex(1 + c), ctx);
  Complex lg = lgamma(Complex(Real(n + 1)) - s, hi) - lgamma(Complex(Real(n + 1)), hi) - lgamma(Complex(2) - s, hi);
  return rounded(exp(lg) * c, ctx);
}

Complex binomial_term_product(const Complex& s, unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("term index must be >= 1");
  PrecisionContext hi = ctx.raised(16);
  if (n == 1) return Complex(eta_integer(2, ctx));
  Real c = chi(n, hi);
  WorkingScope scope(hi);
  Complex p(c);
  for (unsigned long j = 2; j <= n; ++j) p = p * (Complex(Real(j)) - s) / Real(j);
  return rounded(p, ctx);
}

Complex binomial_term_eta(const Complex& s, unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("term index must be >= 1");
  if (n == 1) return Complex(eta_integer(2, ctx));
  const long extra = static_cast<long>(n) + chi_working_bits(n, ctx) - ctx.working_bits() + 16;
  PrecisionContext hi = ctx.raised(extra);
  std::vector<Real> etas;
  for (unsigned long k = 0; k < n; ++k) etas.push_back(eta_integer(k + 2, hi));
  WorkingScope scope(hi);
  // (1/(n-1)!) sum_k C(n-1,k) (-1)^k eta(k+2)
  Real inner;
  Real binom(1);
  for (unsigned long k = 0; k < n; ++k) {
    if (k > 0) binom = binom * Real(n - k) / Real(k);
    Real t = binom * etas[k];
    if (k % 2 == 1)
      inner -= t;
    else
      inner += t;
  }
  Complex coef(1);  // prod_{j=2..n} (j-s)/j, then times n
  for (unsigned long j = 2; j <= n; ++j) coef = coef * (Complex(Real(j)) - s) / Real(j);
  return rounded(coef * inner * Real(n), ctx);
}

Double28Result eta_double28(const Complex& s, std::size_t n_max, const PrecisionContext& ctx) {
  require_right_half(s, "eta_double28");
  if (n_max < 1) throw DomainError("eta_double28 requires n_max >= 1");
  if (ctx.bits() < 2 * static_cast<long>(n_max))
    throw PrecisionError("eta_double28 needs bits >= 2 n_max to survive the binomial cancellation (bits = " +
                         std::to_string(ctx.bits()) + ", n_max = " + std::to_string(n_max) + ")");
  const unsigned long N = static_cast<unsigned long>(n_max);
  const long extra = static_cast<long>(N) + chi_working_bits(N, ctx) - ctx.working_bits() + log2_ceil(N) + 16;
  PrecisionContext hi = ctx.raised(extra);
  std::vector<Real> etas;
  for (unsigned long k = 0; k < N; ++k) etas.push_back(eta_integer(k + 2, hi));

  WorkingScope scope(hi);
  Double28Result out;
  Complex coef(1);  // (n-s)!/(1-s)! / n!
  Complex sum;
  PowerTail tail(n_max, s.re);
  long worst = 0;
  for (unsigned long n = 1; n <= N; ++n) {
    if (n > 1) coef = coef * (Complex(Real(n)) - s) / Real(n);
    Real inner;
    Real binom(1);
    Real peak;
    for (unsigned long k = 0; k < n; ++k) {
      if (k > 0) binom = binom * Real(n - k) / Real(k);
      Real t = binom * etas[k];
      if (k % 2 == 1)
        inner -= t;
      else
        inner += t;
      peak = max(peak, abs(inner));
    }
    out.max_intermediate = max(out.max_intermediate, peak);
    if (!inner.is_zero()) worst = std::max(worst, peak.exponent() - inner.exponent());
    // n!/(n-1)! = n
    Complex term = coef * inner * Real(n);
    sum += term;
    tail.add(n, abs(term));
  }
  out.cancellation_bits = worst;
  Real err = tail.bound() + rounding_floor(ctx.working_bits(), n_max);
  out.result = make_result(sum, n_max, err, "double28", ctx);
  return out;
}

Real psi_minus_one(unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("psi requires n >= 1");
  const long w = chi_working_bits(n, ctx);
  const std::size_t J = chi_cutoff(n, w);
  Real value;
  {
    PrecisionScope scope(w);
    Complex head = blocked_sum(
        2, J + 1,
        [n](std::size_t lo, std::size_t hi) {
          Real acc;
          Real t;
          for (std::size_t j = lo; j < hi; ++j) {
            mpfr_set_ui(t.get(), j - 1, MPFR_RNDN);
            mpfr_div_ui(t.get(), t.get(), j, MPFR_RNDN);
            mpfr_pow_ui(t.get(), t.get(), n - 1, MPFR_RNDN);
            mpfr_mul_ui(t.get(), t.get(), n, MPFR_RNDN);
            mpfr_div_ui(t.get(), t.get(), j, MPFR_RNDN);
            mpfr_div_ui(t.get(), t.get(), j, MPFR_RNDN);
            acc += t;
          }
          return Complex(acc);
        },
        w);

    // Euler-Maclaurin for sum_{j>J} g(j), g(x) = n x^-2 (1-1/x)^(n-1):
    //   int_J^inf g - g(J)/2 - sum_k B_2k/(2k) c_{2k-1},  c_d = g^(d)(J)/d!.
    constexpr std::size_t K = 40;
    const std::size_t D = 2 * K;
    const Real Jr(static_cast<unsigned long>(J));
    const Real Jm1(static_cast<unsigned long>(J - 1));
    std::vector<Real> a(D + 1);  // Taylor coefficients of (n-1) log(1 - 1/(J+h))
    Real ip = 1 / Jr, im = 1 / Jm1, pp = ip, pm = im;
    for (std::size_t m = 1; m <= D; ++m) {
      Real v = (pm - pp) * Real(n - 1) / Real(static_cast<unsigned long>(m));
      a[m] = m % 2 == 1 ? v : -v;
      pp *= ip;
      pm *= im;
    }
    std::vector<Real> e(D + 1);
    e[0] = pow(1 - ip, static_cast<long>(n - 1));
    for (std::size_t k = 1; k <= D; ++k) {
      Real acc;
      for (std::size_t m = 1; m <= k; ++m) acc += Real(static_cast<unsigned long>(m)) * a[m] * e[k - m];
      e[k] = acc / Real(static_cast<unsigned long>(k));
    }
    std::vector<Real> p(D + 1);  // n (J+h)^-2
    Real jp = Real(n) * ip * ip;
    for (std::size_t k = 0; k <= D; ++k) {
      Real v = jp * Real(static_cast<unsigned long>(k + 1));
      p[k] = k % 2 == 1 ? -v : v;
      jp *= ip;
    }
    auto coeff = [&](std::size_t d) {
      Real acc;
      for (std::size_t i = 0; i <= d; ++i) acc += e[i] * p[d - i];
      return acc;
    };
    const std::vector<Real> bern = bernoulli_over_index(K);
    Real tail = 1 - pow(1 - ip, static_cast<long>(n)) - coeff(0) / 2;
    const Real target = pow2(-w);
    for (std::size_t k = 1; k <= K; ++k) {
      Real t = bern[k - 1] * coeff(2 * k - 1);
      tail -= t;
      if (abs(t) < target) break;
    }
    value = head.re + tail - 1;
  }
  WorkingScope scope(ctx);
  return value + Real(0);
}

EvalResult zeta_binomial16_2(const Complex& s, std::size_t n_max, const PrecisionContext& ctx) {
  require_right_half(s, "zeta_binomial16_2");
  if (n_max < 1) throw DomainError("zeta_binomial16_2 requires n_max >= 1");
  {
    WorkingScope scope(ctx);
    if (abs(s - 1) < ctx.sqrt_eps()) throw PoleError("zeta has a pole at s = 1");
  }
  std::vector<Real> psi(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) psi[n] = psi_minus_one(static_cast<unsigned long>(n), ctx);
  const long w = ctx.working_bits() + log2_ceil(n_max) + 8;
  PrecisionScope scope(w);
  Complex r(1);
  Complex sum = 1 / (s - 1) + 1;
  PowerTail tail(n_max, s.re);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const unsigned long nl = static_cast<unsigned long>(n);
    if (n > 1) r = r * (Complex(Real(nl)) - s) / Real(nl);
    Complex term = r * psi[n];
    sum += term;
    tail.add(n, abs(term));
  }
  Real err = tail.bound() + rounding_floor(ctx.working_bits(), n_max);
  return make_result(sum, n_max, err, "zeta16_2", ctx);
}

// ---- interpolation on eta at integers ---------------------------------

namespace {

// gamma = 2L (gamma = 1 gives the melzak29 form with J = 1).
Complex interpolation_sum(const Complex& s, std::size_t m, long J, long gamma, const PrecisionContext& ctx,
                          bool* at_node) {
  const PrecisionContext hi = ctx.raised(static_cast<long>(m) + log2_ceil(m) + 16);
  Complex u;
  {
    WorkingScope scope(hi);
    u = s / Real(gamma);
  }
  {
    WorkingScope scope(ctx);
    for (std::size_t k = 0; k <= m; ++k) {
      const long node = static_cast<long>(k) + J + 1;
      if (abs(u - Real(node)) < ctx.eps()) {
        *at_node = true;
        return Complex(eta_integer(static_cast<unsigned long>(gamma * node), ctx));
      }
    }
  }
  *at_node = false;
  std::vector<Real> etas;
  for (std::size_t k = 0; k <= m; ++k) etas.push_back(eta_integer(static_cast<unsigned long>(gamma * (static_cast<long>(k) + J + 1)), hi));
  WorkingScope scope(hi);
  Complex pref(1);
  for (long i = J + 1; i <= static_cast<long>(m) + 1 + J; ++i) pref *= Complex(Real(i)) - u;
  for (std::size_t i = 2; i <= m; ++i) pref /= Real(static_cast<unsigned long>(i));
  Complex sum;
  Real binom(1);
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > 0) binom = binom * Real(static_cast<unsigned long>(m - k + 1)) / Real(static_cast<unsigned long>(k));
    Complex t = binom * etas[k] / (Complex(Real(static_cast<long>(k) + J + 1)) - u);
    if (k % 2 == 1)
      sum -= t;
    else
      sum += t;
  }
  return pref * sum;
}

EvalResult interpolation_scheme(const Complex& s, std::size_t m, long J, long gamma, const PrecisionContext& ctx,
                                const char* id) {
  bool node = false;
  Complex fm = interpolation_sum(s, m, J, gamma, ctx, &node);
  if (node) return make_result(fm, m + 1, Real(0), id, ctx);
  Real err;
  if (m >= 1) {
    // consecutive differences oscillate in m for large |Im s|, so take the
    // largest of the last three
    Real diff;
    Complex cur = fm;
    for (std::size_t back = 1; back <= 3 && back <= m; ++back) {
      bool node_prev = false;
      Complex fp = interpolation_sum(s, m - back, J, gamma, ctx, &node_prev);
      WorkingScope scope(ctx);
      diff = max(diff, abs(cur - fp));
      cur = fp;
    }
    WorkingScope scope(ctx);
    err = diff * Real(static_cast<unsigned long>(m + 1)) / s.re;
  } else {
    WorkingScope scope(ctx);
    err = abs(fm);
  }
  WorkingScope scope(ctx);
  return make_result(fm, m + 1, err + rounding_floor(ctx.working_bits(), m), id, ctx);
}

}  // namespace

EvalResult eta_melzak29(const Complex& s, std::size_t m, const PrecisionContext& ctx) {
  require_right_half(s, "eta_melzak29");
  return interpolation_scheme(s, m, 1, 1, ctx, "melzak29");
}

EvalResult eta_generalized30(const Complex& s, std::size_t m, long J, long L, const PrecisionContext& ctx) {
  require_right_half(s, "eta_generalized30");
  if (J < 0) throw DomainError("eta_generalized30 requires J >= 0");
  if (L < 1) throw DomainError("eta_generalized30 requires L >= 1");
  return interpolation_scheme(s, m, J, 2 * L, ctx, "generalized30");
}

// ---- Euler products over odd integers ---------------------------------

namespace {

void check_euler_args(long k, std::size_t n, const PrimeList& primes) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (primes.size() < static_cast<std::size_t>(k) + 1)
    throw DomainError("prime list too short for k = " + std::to_string(k));
  if (n <= primes.p(static_cast<std::size_t>(k)))
    throw DomainError("n must exceed p_k = " + std::to_string(primes.p(static_cast<std::size_t>(k))));
}

// sum over odd o in [p_{k+1}, 2n-1] coprime to p_2..p_k of o^-s
Complex sieved_odd_sum(const Complex& s, long k, std::size_t n, const PrimeList& primes, long bits) {
  std::vector<std::uint64_t> sieve(primes.values().begin() + 1, primes.values().begin() + k);
  const std::size_t first = (primes.p(static_cast<std::size_t>(k) + 1) + 1) / 2;
  return blocked_sum(
      first, n + 1,
      [&s, &sieve](std::size_t lo, std::size_t hi) {
        Complex acc;
        for (std::size_t j = lo; j < hi; ++j) {
          const std::uint64_t o = 2 * j - 1;
          bool keep = true;
          for (std::uint64_t p : sieve)
            if (o % p == 0) {
              keep = false;
              break;
            }
          if (keep) acc += inv_pow(o, s);
        }
        return acc;
      },
      bits);
}

}  // namespace

Complex euler_product_generalized(const Complex& s, long k, std::size_t n, const PrimeList& primes,
                                  const PrecisionContext& ctx) {
  require_right_half(s, "euler_product_generalized");
  check_euler_args(k, n, primes);
  {
    WorkingScope scope(ctx);
    if (abs(s - 1) < ctx.sqrt_eps()) throw PoleError("zeta has a pole at s = 1");
  }
  const long w = ctx.working_bits() + log2_ceil(n) + 8;
  Complex sum = sieved_odd_sum(s, k, n, primes, w);
  PrecisionScope scope(w);
  Real density(1);
  Complex euler(1);
  for (long j = 1; j <= k; ++j) {
    const std::uint64_t p = primes.p(static_cast<std::size_t>(j));
    density *= 1 - 1 / Real(static_cast<unsigned long>(p));
    euler *= 1 - inv_pow(p, s);
  }
  const unsigned long top = static_cast<unsigned long>(2 * n - 1);
  Complex lhs = 1 + sum - pow(Real(top), 1 - s) / (1 - s) * density;
  return rounded(lhs / euler, ctx);
}

Real norm_ratio15(const Complex& s, long k, std::size_t n, const PrimeList& primes, const PrecisionContext& ctx) {
  {
    WorkingScope scope(ctx);
    if (!(s.re > 0) || s.re > Real(0.5)) throw DomainError("norm_ratio15 requires 0 < Re(s) <= 1/2");
  }
  check_euler_args(k, n, primes);
  const long w = ctx.working_bits() + log2_ceil(n) + 8;
  Complex a = sieved_odd_sum(s, k, n, primes, w);
  Complex b = sieved_odd_sum(Complex(1) - s, k, n, primes, w);
  PrecisionScope scope(w);
  Real ratio = abs(1 + a) / abs(1 + b);
  return rounded(ratio, ctx);
}

Real norm_ratio15_rhs(const Complex& s, std::size_t n, const PrecisionContext& ctx) {
  WorkingScope scope(ctx);
  const unsigned long top = static_cast<unsigned long>(2 * n - 1);
  return abs(s) / abs(1 - s) * pow(Real(top), 1 - 2 * s.re);
}

// ---- periodic-coefficient schemes --------------------------------------

std::vector<long> fast31_coefficients(long k) {
  if (k < 2) throw DomainError("periodic schemes require k >= 2");
  const long M = 2 * k - 1;
  std::vector<long> c(static_cast<std::size_t>(M), 1);
  c[static_cast<std::size_t>(k - 1)] = 1 - M;  // residue 2(k-1)+1 = M
  return c;
}

namespace {

// sum_{i=first..last-1} c(2i+1) (2i+1)^-s for the period-2M coefficients.
Complex periodic_sum(const Complex& s, long M, std::size_t first, std::size_t last, long bits) {
  return blocked_sum(
      first, last,
      [&s, M](std::size_t lo, std::size_t hi) {
        Complex acc;
        for (std::size_t i = lo; i < hi; ++i) {
          const unsigned long o = static_cast<unsigned long>(2 * i + 1);
          if (static_cast<long>(o % static_cast<unsigned long>(2 * M)) == M)
            acc -= inv_pow(o, s) * Real(M - 1);
          else
            acc += inv_pow(o, s);
        }
        return acc;
      },
      bits);
}

}  // namespace

EvalResult fast_scheme31(const Complex& s, long k, std::size_t N_periods, const PrecisionContext& ctx) {
  require_right_half(s, "fast_scheme31");
  if (k < 2) throw DomainError("fast_scheme31 requires k >= 2");
  if (N_periods < 1) throw DomainError("fast_scheme31 requires at least one period");
  const long M = 2 * k - 1;
  Complex pref;
  {
    WorkingScope scope(ctx);
    pref = (1 - pow(Real(M), 1 - s)) * (1 - pow(Real(2), -s));
    if (abs(pref) < ctx.sqrt_eps()) throw ConditioningError("s is within sqrt(eps) of a zero of the fast31 prefactor");
  }
  const std::size_t terms = N_periods * static_cast<std::size_t>(M);
  const long w = ctx.working_bits() + log2_ceil(terms) + 8;
  Complex sum = periodic_sum(s, M, 0, terms, w);
  Complex last = periodic_sum(s, M, terms - static_cast<std::size_t>(M), terms, w);
  WorkingScope scope(ctx);
  Real err = 2 * abs(last) * Real(static_cast<unsigned long>(N_periods)) / (1 + s.re) / abs(pref);
  return make_result(sum / pref, terms, err + rounding_floor(ctx.working_bits(), terms), "fast31", ctx);
}

Complex lhs31(const Complex& s, long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("k must be >= 1");
  EvalResult z = zeta_ref(s, ctx.raised(16));
  WorkingScope scope(ctx);
  const long M = 2 * k - 1;
  Complex v = (1 - pow(Real(M), s - 1)) * (pow(Real(2), s) - 1) * z.value;
  return rounded(v, ctx);
}

Complex rhs31(const Complex& s, long k, std::size_t N, const PrecisionContext& ctx) {
  require_right_half(s, "rhs31");
  if (k < 1) throw DomainError("k must be >= 1");
  const long M = 2 * k - 1;
  const PrecisionContext hi = ctx.raised(log2_ceil(N) + 16);
  WorkingScope scope(hi);
  Complex g(1);  // Gamma(n+s)/(n! Gamma(s))
  Complex sum;
  for (std::size_t n = 1; n <= N; ++n) {
    const long nl = static_cast<long>(n);
    g = g * (s + Real(nl - 1)) / Real(nl);
    if (n < 2) continue;
    // [1 - sum_j (2j-1)^n / M^(n+1)] / 2^n
    Real w = pow2(-nl);
    for (long j = 1; j <= M; ++j) w -= pow(Real(2 * j - 1) / Real(2 * M), nl) / Real(M);
    Complex zn = zeta_ref(s + Real(nl), hi).value;
    sum += g * w * zn;
  }
  return rounded(sum, ctx);
}

std::string ExactRational::str() const { return denominator == "1" ? numerator : numerator + "/" + denominator; }

Real ExactRational::to_real() const { return Real::parse(numerator) / Real::parse(denominator); }

namespace {

ExactRational exact(const cpp_rational& v) {
  return ExactRational{boost::multiprecision::numerator(v).str(), boost::multiprecision::denominator(v).str()};
}

cpp_rational kill_weight(long M, long n) {
  cpp_int sum = 0;
  for (long r = 1; r < 2 * M; r += 2) sum += boost::multiprecision::pow(cpp_int(r), static_cast<unsigned>(n));
  sum -= boost::multiprecision::pow(cpp_int(M), static_cast<unsigned>(n + 1));
  return cpp_rational(sum, boost::multiprecision::pow(cpp_int(2 * M), static_cast<unsigned>(n)));
}

}  // namespace

CombinedCoefficients combined_coefficients(const std::vector<long>& k_set, long n_kill) {
  if (k_set.size() < 2) throw DomainError("combined scheme needs at least two k values");
  if (n_kill < 1) throw DomainError("n_kill must be >= 1");
  std::set<long> seen;
  for (long k : k_set) {
    if (k < 2) throw DomainError("combined scheme requires every k >= 2");
    if (!seen.insert(k).second) throw DomainError("duplicate k in combined scheme");
  }
  const std::size_t cols = k_set.size();
  const std::size_t rows = static_cast<std::size_t>(n_kill);
  std::vector<std::vector<cpp_rational>> A(rows, std::vector<cpp_rational>(cols));
  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t i = 0; i < cols; ++i) A[n][i] = kill_weight(2 * k_set[i] - 1, static_cast<long>(n));

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    cpp_rational inv = 1 / A[r][c];
    for (auto& v : A[r]) v *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || A[q][c] == 0) continue;
      cpp_rational f = A[q][c];
      for (std::size_t j = 0; j < cols; ++j) A[q][j] -= f * A[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (cols - pivot_col.size() != 1)
    throw SingularSystemError("kill system null space has dimension " + std::to_string(cols - pivot_col.size()) +
                              ", expected 1");
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<cpp_rational> a(cols);
  a[free_col] = 1;
  for (std::size_t q = 0; q < pivot_col.size(); ++q) a[pivot_col[q]] = -A[q][free_col];

  const cpp_rational b1 = a[0] * (2 * k_set[0] - 1);
  if (b1 == 0) throw SingularSystemError("kill system forces a zero weight on the first series");

  CombinedCoefficients out;
  out.k_set = k_set;
  out.n_kill = n_kill;
  for (std::size_t i = 0; i < cols; ++i) {
    a[i] /= b1;
    out.a.push_back(exact(a[i]));
    out.b.push_back(exact(a[i] * (2 * k_set[i] - 1)));
  }
  for (long n = 0; n <= n_kill; ++n) {
    cpp_rational acc = 0;
    for (std::size_t i = 0; i < cols; ++i) acc += a[i] * kill_weight(2 * k_set[i] - 1, n);
    out.kill_residuals.push_back(exact(acc));
  }
  return out;
}

EvalResult combined_scheme37(const Complex& s, const std::vector<long>& k_set, long n_kill,
                             const std::vector<std::size_t>& terms_per_series, const PrecisionContext& ctx) {
  require_right_half(s, "combined_scheme37");
  if (terms_per_series.size() != k_set.size()) throw DomainError("terms_per_series must match k_set in length");
  const CombinedCoefficients coef = combined_coefficients(k_set, n_kill);
  std::size_t total = 0;
  for (std::size_t t : terms_per_series) {
    if (t < 1) throw DomainError("each combined series needs at least one term");
    total += t;
  }
  const long w = ctx.working_bits() + log2_ceil(total) + 8;

  Complex denom;
  {
    PrecisionScope scope(w);
    Complex bracket;
    for (std::size_t i = 0; i < k_set.size(); ++i) {
      const long M = 2 * k_set[i] - 1;
      bracket += coef.b[i].to_real() * (pow(Real(M), s - 1) - 1);
    }
    denom = (pow(Real(2), s) - 1) * bracket;
  }
  {
    WorkingScope scope(ctx);
    if (abs(denom) < ctx.sqrt_eps()) throw ConditioningError("s is within sqrt(eps) of a zero of the combined prefactor");
  }

  // All series with whole, equal period counts: the combined last period decays
  // like b^(-s-n_kill). Otherwise each series contributes its own tail.
  bool aligned = true;
  std::size_t periods = 0;
  for (std::size_t i = 0; i < k_set.size(); ++i) {
    const std::size_t M = static_cast<std::size_t>(2 * k_set[i] - 1);
    const std::size_t p = terms_per_series[i] / M;
    if (terms_per_series[i] % M != 0 || p == 0 || (i > 0 && p != periods)) aligned = false;
    if (i == 0) periods = p;
  }

  PrecisionScope scope(w);
  Complex total_sum;
  Complex last_combined;
  Real loose_tail;
  for (std::size_t i = 0; i < k_set.size(); ++i) {
    const long M = 2 * k_set[i] - 1;
    const std::size_t t = terms_per_series[i];
    Complex weight = coef.a[i].to_real() * pow(Real(2 * M), s);
    total_sum += weight * periodic_sum(s, M, 0, t, w);
    const std::size_t Mu = static_cast<std::size_t>(M);
    if (aligned) {
      last_combined += weight * periodic_sum(s, M, t - Mu, t, w);
    } else {
      const std::size_t p = t / Mu;
      const std::size_t whole = p * Mu;
      Real part = whole < t ? abs(periodic_sum(s, M, whole, t, w)) : Real(0);
      Real block = p > 0 ? abs(periodic_sum(s, M, whole - Mu, whole, w)) : part;
      loose_tail += abs(weight) * (block * Real(static_cast<unsigned long>(std::max<std::size_t>(p, 1))) / s.re + part);
    }
  }
  Real err;
  if (aligned)
    err = 2 * abs(last_combined) * Real(static_cast<unsigned long>(periods)) / (Real(n_kill - 1) + s.re);
  else
    err = 2 * loose_tail;
  err = err / abs(denom) + rounding_floor(ctx.working_bits(), total);
  return make_result(total_sum / denom, total, err, "combined37", ctx);
}

// ---- dispatch ------------------------------------------------------------

namespace {

constexpr std::pair<SchemeKind, const char*> kKindNames[] = {
    {SchemeKind::dirichlet, "dirichlet"},         {SchemeKind::binomial16, "binomial16"},
    {SchemeKind::double28, "double28"},           {SchemeKind::melzak29, "melzak29"},
    {SchemeKind::generalized30, "generalized30"}, {SchemeKind::zeta16_2, "zeta16_2"},
    {SchemeKind::euler_product, "euler_product"}, {SchemeKind::fast31, "fast31"},
    {SchemeKind::combined37, "combined37"},
};

}  // namespace

std::string to_string(SchemeKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<SchemeKind> parse_scheme_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  return std::nullopt;
}

bool scheme_returns_eta(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::binomial16:
    case SchemeKind::double28:
    case SchemeKind::melzak29:
    case SchemeKind::generalized30:
      return true;
    default:
      return false;
  }
}

void SchemeSpec::validate() const {
  const bool wants_k = kind == SchemeKind::euler_product || kind == SchemeKind::fast31;
  const bool wants_jl = kind == SchemeKind::generalized30;
  const bool wants_set = kind == SchemeKind::combined37;
  const std::string name = to_string(kind);
  if (wants_k != k.has_value()) throw DomainError(name + (wants_k ? " requires k" : " does not take k"));
  if (wants_jl != J.has_value() || wants_jl != L.has_value())
    throw DomainError(name + (wants_jl ? " requires J and L" : " does not take J or L"));
  if (wants_set != N.has_value()) throw DomainError(name + (wants_set ? " requires N" : " does not take N"));
  if (wants_set != !k_set.empty() || wants_set != !terms_per_series.empty())
    throw DomainError(name + (wants_set ? " requires k_set and terms" : " does not take k_set or terms"));
  if (!wants_set && m_or_terms == 0) throw DomainError(name + " requires a positive term count");
}

EvalResult evaluate(const SchemeSpec& spec, const Complex& s, const PrecisionContext& ctx) {
  spec.validate();
  const std::size_t m = spec.m_or_terms;
  switch (spec.kind) {
    case SchemeKind::dirichlet:
      return dirichlet_partial(s, m, ctx);
    case SchemeKind::binomial16:
      return eta_binomial16(s, m, ctx);
    case SchemeKind::double28:
      return eta_double28(s, m, ctx).result;
    case SchemeKind::melzak29:
      return eta_melzak29(s, m, ctx);
    case SchemeKind::generalized30:
      return eta_generalized30(s, m, *spec.J, *spec.L, ctx);
    case SchemeKind::zeta16_2:
      return zeta_binomial16_2(s, m, ctx);
    case SchemeKind::euler_product: {
      const long k = *spec.k;
      if (k < 1) throw DomainError("k must be >= 1");
      PrimeList primes(static_cast<std::size_t>(k) + 1);
      Complex v = euler_product_generalized(s, k, m, primes, ctx);
      // No rigorous bound; the dropped (2n-1)^-sigma scale, pushed through the
      // Euler-factor division, stands in.
      WorkingScope scope(ctx);
      Complex euler(1);
      for (long j = 1; j <= k; ++j) euler *= 1 - inv_pow(primes.p(static_cast<std::size_t>(j)), s);
      Real err = pow(Real(static_cast<unsigned long>(2 * m - 1)), -s.re) * (1 + abs(s)) / abs(euler);
      return make_result(v, m, err, "euler_product", ctx);
    }
    case SchemeKind::fast31:
      return fast_scheme31(s, *spec.k, m, ctx);
    case SchemeKind::combined37:
      return combined_scheme37(s, spec.k_set, *spec.N, spec.terms_per_series, ctx);
  }
  throw DomainError("unknown scheme");
}

}  // namespace zetakit
