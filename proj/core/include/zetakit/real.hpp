#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <string>
#include <string_view>

namespace zetakit {

// Precision (in bits) given to Real values created on the calling thread.
long working_precision() noexcept;

// Sets the calling thread's working precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

// Multiprecision real backed by an mpfr_t. New values and the results of
// arithmetic carry the thread's working precision; copies keep the source's.
class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(unsigned long v);
  Real(double v);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  ~Real();

  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;

  // Parses a decimal literal such as "0.2" or "-1.5e-3"; rounds once.
  static Real parse(std::string_view text);

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }

  double to_double() const;
  long to_long() const;  // rounds to nearest
  bool is_zero() const;
  bool is_finite() const;
  int sign() const;
  // Binary exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
  long exponent() const;

  // Scientific notation with `digits` significant decimal digits, '.' as
  // decimal separator regardless of locale.
  std::string to_string(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator-(const Real& a);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t v_;
};

template <class T>
concept Scalar = std::is_arithmetic_v<T> && !std::same_as<T, bool>;

namespace detail {
template <Scalar T>
Real to_real(T v) {
  if constexpr (std::is_floating_point_v<T>)
    return Real(static_cast<double>(v));
  else if constexpr (std::is_signed_v<T>)
    return Real(static_cast<long>(v));
  else
    return Real(static_cast<unsigned long>(v));
}
}  // namespace detail

template <Scalar T> Real operator+(const Real& a, T b) { return a + detail::to_real(b); }
template <Scalar T> Real operator-(const Real& a, T b) { return a - detail::to_real(b); }
template <Scalar T> Real operator*(const Real& a, T b) { return a * detail::to_real(b); }
template <Scalar T> Real operator/(const Real& a, T b) { return a / detail::to_real(b); }
template <Scalar T> Real operator+(T a, const Real& b) { return detail::to_real(a) + b; }
template <Scalar T> Real operator-(T a, const Real& b) { return detail::to_real(a) - b; }
template <Scalar T> Real operator*(T a, const Real& b) { return detail::to_real(a) * b; }
template <Scalar T> Real operator/(T a, const Real& b) { return detail::to_real(a) / b; }
template <Scalar T> bool operator==(const Real& a, T b) { return a == detail::to_real(b); }
template <Scalar T> std::partial_ordering operator<=>(const Real& a, T b) {
  return a <=> detail::to_real(b);
}

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(const Real& x, Real& s, Real& c);
Real tan(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real asinh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real ceil(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

Real const_pi();
Real const_ln2();

// 2^e at working precision (exact).
Real pow2(long e);
// log(n) for a positive integer.
Real log_ui(unsigned long n);

}  // namespace zetakit
