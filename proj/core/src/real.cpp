#include "zetakit/real.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "zetakit/errors.hpp"

namespace zetakit {

namespace {
thread_local long t_precision = 256;

mpfr_prec_t wp() { return static_cast<mpfr_prec_t>(t_precision); }

template <class Op>
Real unary(const Real& x, Op op) {
  Real r;
  op(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace

long working_precision() noexcept { return t_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(t_precision) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw PrecisionError("precision out of range");
  t_precision = bits;
}

PrecisionScope::~PrecisionScope() { t_precision = saved_; }

Real::Real() {
  mpfr_init2(v_, wp());
  mpfr_set_zero(v_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
  mpfr_init2(v_, wp());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(unsigned long v) {
  mpfr_init2(v_, wp());
  mpfr_set_ui(v_, v, MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(v_, wp());
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real Real::parse(std::string_view text) {
  std::string buf(text);
  Real r;
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end == buf.c_str() || *end != '\0')
    throw DomainError("not a number: '" + buf + "'");
  if (!r.is_finite()) throw DomainError("not a finite number: '" + buf + "'");
  return r;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
long Real::to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
bool Real::is_zero() const { return mpfr_zero_p(v_) != 0; }
bool Real::is_finite() const { return mpfr_number_p(v_) != 0; }
int Real::sign() const { return mpfr_sgn(v_); }

long Real::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (digits < 2) digits = 2;
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  std::size_t i = 0;
  if (mant[0] == '-') {
    out.push_back('-');
    i = 1;
  }
  if (mpfr_zero_p(v_)) {
    out += "0." + std::string(static_cast<std::size_t>(digits - 1), '0') + "e+0";
    return out;
  }
  out.push_back(mant[i]);
  out.push_back('.');
  out.append(mant, i + 1, std::string::npos);
  long exp10 = static_cast<long>(e) - 1;
  out += (exp10 < 0 ? "e-" : "e+") + std::to_string(exp10 < 0 ? -exp10 : exp10);
  return out;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) { return unary(a, mpfr_neg); }

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real log2(const Real& x) { return unary(x, mpfr_log2); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real asinh(const Real& x) { return unary(x, mpfr_asinh); }

void sin_cos(const Real& x, Real& s, Real& c) {
  Real ss, cc;
  mpfr_sin_cos(ss.get(), cc.get(), x.get(), MPFR_RNDN);
  s = std::move(ss);
  c = std::move(cc);
}

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}
Real ceil(const Real& x) {
  Real r;
  mpfr_ceil(r.get(), x.get());
  return r;
}
Real round(const Real& x) {
  Real r;
  mpfr_round(r.get(), x.get());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real const_pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_ln2() {
  Real r;
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real pow2(long e) {
  Real r(1L);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real log_ui(unsigned long n) {
  Real r;
  mpfr_log_ui(r.get(), n, MPFR_RNDN);
  return r;
}

}  // namespace zetakit
