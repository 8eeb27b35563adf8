#pragma once

#include <string>

#include "zetakit/real.hpp"

namespace zetakit {

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(const Real& r) : re(r) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(int r) : re(r) {}
  Complex(long r) : re(r) {}
  Complex(double r) : re(r) {}
  Complex(double r, double i) : re(r), im(i) {}

  // Parses "re,im" or a bare real.
  static Complex parse(std::string_view text);

  bool is_real() const { return im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator+(const Real& a, const Complex& b);

template <Scalar T> Complex operator+(const Complex& a, T b) { return a + detail::to_real(b); }
template <Scalar T> Complex operator-(const Complex& a, T b) { return a - detail::to_real(b); }
template <Scalar T> Complex operator*(const Complex& a, T b) { return a * detail::to_real(b); }
template <Scalar T> Complex operator/(const Complex& a, T b) { return a / detail::to_real(b); }
template <Scalar T> Complex operator+(T a, const Complex& b) { return detail::to_real(a) + b; }
template <Scalar T> Complex operator-(T a, const Complex& b) { return detail::to_real(a) - b; }
template <Scalar T> Complex operator*(T a, const Complex& b) { return detail::to_real(a) * b; }
template <Scalar T> Complex operator/(T a, const Complex& b) { return Complex(detail::to_real(a)) / b; }

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);
// base^w for real base > 0.
Complex pow(const Real& base, const Complex& w);
// n^(-s) for a positive integer n.
Complex inv_pow(unsigned long n, const Complex& s);
// exp(i*theta)
Complex expi(const Real& theta);

std::string to_string(const Complex& z, int digits);

}  // namespace zetakit
