#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/melzak.hpp"
#include "zetakit/schemes.hpp"
#include "test_util.hpp"

using namespace zetakit;
using namespace testutil;

namespace {

const PrecisionContext kCtx(256);

Real rel_gap(const std::pair<Complex, Complex>& p) {
  PrecisionScope scope(600);
  Real scale = max(abs(p.first), abs(p.second));
  if (scale.is_zero()) return Real(0);
  return abs(p.first - p.second) / scale;
}

// ((m-1)/2)! for even m from the double factorial: Gamma(n + 1/2) = (2n-1)!! sqrt(pi) / 2^n
Real half_factorial(std::size_t m) {
  PrecisionScope scope(600);
  const std::size_t n = m / 2;
  Real v = sqrt(const_pi());
  for (std::size_t j = 1; j <= n; ++j) v = v * Real(static_cast<unsigned long>(2 * j - 1)) / 2;
  return v;
}

Real binom(unsigned long n, unsigned long k) {
  PrecisionScope scope(600);
  Real b(1);
  for (unsigned long i = 1; i <= k; ++i) b = b * Real(n - k + i) / Real(i);
  return b;
}

Real fact(unsigned long n) {
  PrecisionScope scope(600);
  Real f(1);
  for (unsigned long i = 2; i <= n; ++i) f = f * Real(i);
  return f;
}

}  // namespace

TEST(MelzakTransform, ConstantAndQuadratic) {
  Polynomial c({Complex(Real(7))});
  for (std::size_t m : {0u, 3u, 9u}) {
    Complex v = melzak_transform(c, C("0.4", "1"), C("2.5", "-3"), kCtx, m);
    EXPECT_LT(dist(v, Complex(7)), pow2(-240)) << m;
  }
  Polynomial sq({Complex(0), Complex(0), Complex(1)});
  Complex v = melzak_transform(sq, Complex(0), Complex(Real(0.5)), kCtx);
  EXPECT_LT(dist(v, Complex(Real(0.25))), pow2(-240));
}

TEST(MelzakTransform, NotExactAboveDegree) {
  Polynomial cube({Complex(0), Complex(0), Complex(0), Complex(1)});
  Complex x = C("0.3"), y = C("0.5", "0.25");
  Complex v = melzak_transform(cube, x, y, kCtx, 2);
  Complex want;
  {
    PrecisionScope s(600);
    Complex d = x - y;
    want = d * d * d;
  }
  EXPECT_GT(dist(v, want), R("1e-3"));
  EXPECT_LT(dist(melzak_transform(cube, x, y, kCtx, 3), want), pow2(-240));
}

TEST(MelzakTransform, ForbiddenNodes) {
  Polynomial p({Complex(1), Complex(2)});
  EXPECT_THROW(melzak_transform(p, Complex(0), Complex(0), kCtx, 4), ForbiddenNodeError);
  EXPECT_THROW(melzak_transform(p, Complex(0), Complex(4), kCtx, 4), ForbiddenNodeError);
  EXPECT_NO_THROW(melzak_transform(p, Complex(0), Complex(5), kCtx, 4));
}

TEST(MelzakTransform, RandomPolynomialsAreExact) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(0, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = deg(rng);
    std::uniform_int_distribution<int> mm(d, 16);
    const std::size_t m = static_cast<std::size_t>(mm(rng));
    std::vector<Complex> coeffs;
    for (int i = 0; i <= d; ++i) {
      const double a = u(rng), b = u(rng);
      coeffs.emplace_back(Real(a), Real(b));
    }
    const double xr = 3 * u(rng), xi = 3 * u(rng), yr = 8 * u(rng) + 8, yi = u(rng);
    Complex x{Real(xr), Real(xi)}, y{Real(yr), Real(yi)};
    Polynomial f(coeffs);
    Complex got = melzak_transform(f, x, y, kCtx, m);
    Complex want;
    Real scale;
    {
      PrecisionScope s(600);
      Complex t = x - y;
      for (std::size_t i = coeffs.size(); i-- > 0;) want = want * t + coeffs[i];
      // coefficient scale over the sample points x - k
      Real reach = abs(x) + Real(static_cast<unsigned long>(m)) + 1;
      Real pw(1);
      for (const Complex& c : coeffs) {
        scale += abs(c) * pw;
        pw *= reach;
      }
    }
    EXPECT_LE(dist(got, want), pow2(6 - kCtx.bits()) * scale) << trial << " d=" << d << " m=" << m;
  }
}

TEST(Admissibility, ExponentialVersusCosine) {
  const PrecisionContext ctx(256);
  Complex y = C("0.3333333333333333333333333333333333333333333333333333333333333333333333333333333");
  auto expq = [](std::size_t i) {
    Real v(1);
    for (std::size_t j = 1; j <= i; ++j) v = v / Real(static_cast<unsigned long>(4 * j));
    return Complex(v);
  };
  auto cosc = [](std::size_t i) {
    if (i % 2) return Complex(0);
    Real v(1);
    for (std::size_t j = 1; j <= i; ++j) v = v / Real(static_cast<unsigned long>(j));
    return Complex((i / 2) % 2 ? -v : v);
  };
  // mpmath, 120 digits at y = 1/3
  const std::size_t ms[] = {12, 24, 48};
  const double want_exp[] = {3.11103e-11, 1.79122e-19, 1.37822e-35};
  const double want_cos[] = {0.00315592, 0.00103548, 0.000177912};
  for (int i = 0; i < 3; ++i) {
    Real e = admissibility_residual(expq, y, ms[i], ctx);
    Real c = admissibility_residual(cosc, y, ms[i], ctx);
    EXPECT_NEAR(e.to_double() / want_exp[i], 1.0, 1e-4) << ms[i];
    EXPECT_NEAR(c.to_double() / want_cos[i], 1.0, 1e-4) << ms[i];
  }
  // geometric against algebraic decay
  Real e24 = admissibility_residual(expq, y, 24, ctx), c24 = admissibility_residual(cosc, y, 24, ctx);
  Real e48 = admissibility_residual(expq, y, 48, ctx), c48 = admissibility_residual(cosc, y, 48, ctx);
  EXPECT_LT(e24, R("1e-6"));
  EXPECT_LT(e48 / e24, R("1e-10"));
  EXPECT_GT(c48 / c24, R("1e-2"));
}

TEST(Admissibility, PolynomialResidualIsZero) {
  auto poly = [](std::size_t i) { return i <= 5 ? Complex(Real(static_cast<long>(i) + 1)) : Complex(0); };
  EXPECT_TRUE(admissibility_residual(poly, C("0.5"), 8, kCtx).is_zero());
  EXPECT_THROW(admissibility_residual(poly, Complex(3), 8, kCtx), ForbiddenNodeError);
}

TEST(Identity62, SmallCases) {
  auto a = identity62(2, C("0.33333333333333333333333333333333333333333333333333333333333333333333333333333"), kCtx);
  EXPECT_LT(dist(a.first, a.second), R("1e-70"));
  auto b = identity62(1, C("0.5"), kCtx);
  EXPECT_LT(abs(b.second), pow2(-240));
  EXPECT_LT(abs(b.first), pow2(-240));
  EXPECT_THROW(identity62(3, Complex(2), kCtx), ForbiddenNodeError);
}

TEST(Identity62, ScaledFormAtShiftedArgument) {
  const std::size_t m = 4;
  Complex s = C("0.3", "1");
  Complex y;
  {
    PrecisionScope p(600);
    y = s - Real(2);
  }
  auto i62 = identity62(m, y, kCtx);
  auto i63 = identity63(m, s, kCtx);
  EXPECT_LT(rel_gap(i63), pow2(8 - 256));
  Complex scaled;
  {
    PrecisionScope p(600);
    Real hf = half_factorial(m);
    scaled = i62.second * const_pi() * fact(m) / (pow2(2 * static_cast<long>(m)) * hf * hf);
  }
  EXPECT_LT(rel_gap({scaled, i63.first}), pow2(8 - 256));
}

TEST(Identity64, ReducesAtHalfBeta) {
  for (std::size_t m : {2u, 4u, 6u}) {
    Complex s = C("0.3", "1");
    auto i64 = identity64(m, C("0.5"), Complex(2), s, kCtx);
    auto i63 = identity63(m, s, kCtx);
    Complex scaled;
    {
      PrecisionScope p(600);
      Real hf = half_factorial(m);
      scaled = i63.first * hf * hf;
    }
    EXPECT_LT(rel_gap({scaled, i64.first}), pow2(8 - 256)) << m;
  }
}

TEST(Identity64, GenericPointAndIntegerBeta) {
  auto r = identity64(3, C("0.3", "0.2"), C("1.1"), C("0.4", "2"), kCtx);
  EXPECT_LT(rel_gap(r), R("1e-70"));
  EXPECT_THROW(identity64(3, Complex(1), C("1.1"), C("0.4", "2"), kCtx), IntegerBetaError);
  EXPECT_THROW(identity64(3, C("0.3"), Complex(1), Complex(3), kCtx), ForbiddenNodeError);
}

TEST(Identities, RandomParametersUpToTwelve) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t m = 1; m <= 12; ++m) {
    for (int t = 0; t < 4; ++t) {
      const double y0 = 6 * u(rng), y1 = 2 * u(rng);
      const double b0 = u(rng) * 0.45 + 0.5, b1 = u(rng);
      const double g0 = 2 * u(rng), s0 = u(rng) * 0.4 + 0.5, s1 = 5 * u(rng);
      Complex y{Real(y0), Real(y1)};
      EXPECT_LT(rel_gap(identity62(m, y, kCtx)), pow2(8 - 256)) << m;
      Complex beta{Real(b0), Real(b1)}, gamma{Real(g0)}, s{Real(s0), Real(s1)};
      EXPECT_LT(rel_gap(identity64(m, beta, gamma, s, kCtx)), pow2(8 - 256)) << m;
    }
  }
}

TEST(Epsilon, PositiveForEveryEvenOrder) {
  for (std::size_t m = 2; m <= 64; m += 2) {
    EpsilonVector e = epsilon_coeffs(m, kCtx);
    ASSERT_EQ(e.eps.size(), m + 1);
    for (std::size_t k = 0; k <= m; ++k) EXPECT_GT(e.eps[k], Real(0)) << m << "," << k;
    Real sum;
    {
      WorkingScope w(kCtx);
      for (const Real& v : e.eps) sum += v;
    }
    Real closed = epsilon_sum_closed_form(m, kCtx);
    EXPECT_LT(abs(sum - closed), Real(8) * kCtx.eps() * max(Real(1), closed)) << m;
  }
  EXPECT_THROW(epsilon_coeffs(3, kCtx), DomainError);
}

TEST(Epsilon, SumClosedFormAtTwenty) {
  EpsilonVector e = epsilon_coeffs(20, kCtx);
  Real sum;
  for (const Real& v : e.eps) sum += v;
  Real chi21 = chi(21, kCtx);
  Real want;
  {
    PrecisionScope p(600);
    Real hf = half_factorial(20);
    want = chi21 / fact(21) + const_pi() / (hf * hf);
  }
  EXPECT_LT(abs(sum - want), Real(8) * kCtx.eps());
}

TEST(Epsilon, PositivePartBound) {
  const std::size_t m = 16;
  EpsilonVector e = epsilon_coeffs(m, kCtx);
  Real hf = half_factorial(m);
  for (unsigned long k = 0; k <= m; ++k) {
    PrecisionScope p(600);
    Real lhs = const_pi() * binom(2 * k, k) * binom(2 * (m - k), m - k) / (pow2(2 * static_cast<long>(m)) * hf * hf);
    Real rhs = Real(1) / (fact(k) * fact(m - k));
    EXPECT_GE(lhs, rhs) << k;
    EXPECT_LT(abs(lhs - e.positive_part[k]) / lhs, pow2(8 - 256)) << k;
  }
}

TEST(Via66, MatchesMelzak29AndOracle) {
  Complex s = C("0.2", "2");
  EvalResult v = eta_via66(s, 20, kCtx);
  EvalResult m = eta_melzak29(s, 20, kCtx);
  EXPECT_LT(dist(v.value, m.value), pow2(16 - 256) * max(Real(1), abs(m.value)));
  EXPECT_LT(dist(v.value, C("0.700823945876241382429659907871", "0.435337075093518924648709626813")), R("1e-28"));

  EvalResult big = eta_via66(s, 64, kCtx);
  EXPECT_LT(dist(big.value, eta_ref(s, kCtx).value), R("1e-6"));
  EXPECT_THROW(eta_via66(s, 7, kCtx), DomainError);
}
