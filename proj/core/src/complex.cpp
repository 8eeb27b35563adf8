#include "zetakit/complex.hpp"

#include <string>

#include "zetakit/errors.hpp"

namespace zetakit {

Complex Complex::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return Complex(Real::parse(text));
  return Complex(Real::parse(text.substr(0, comma)), Real::parse(text.substr(comma + 1)));
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re /= o;
  im /= o;
  return *this;
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return {a.re * b.re, a.im * b.re};
  if (a.im.is_zero()) return {a.re * b.re, a.re * b.im};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator+(const Real& a, const Complex& b) { return {a + b.re, b.im}; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex expi(const Real& theta) {
  Complex r;
  sin_cos(theta, r.im, r.re);
  return r;
}

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  if (z.im.is_zero()) return Complex(m);
  Complex e = expi(z.im);
  return {m * e.re, m * e.im};
}

Complex log(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("log of zero");
  if (z.im.is_zero() && z.re.sign() > 0) return Complex(log(z.re));
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return Complex(sqrt(z.re));
    return {Real(0), sqrt(-z.re)};
  }
  Real r = abs(z);
  Real a = sqrt((r + abs(z.re)) / 2);
  if (z.re.sign() >= 0) return {a, z.im / (2 * a)};
  Real b = z.im.sign() >= 0 ? a : -a;
  return {abs(z.im) / (2 * a), b};
}

Complex sin(const Complex& z) {
  Real s, c;
  sin_cos(z.re, s, c);
  if (z.im.is_zero()) return Complex(s);
  return {s * cosh(z.im), c * sinh(z.im)};
}

Complex cos(const Complex& z) {
  Real s, c;
  sin_cos(z.re, s, c);
  if (z.im.is_zero()) return Complex(c);
  return {c * cosh(z.im), -(s * sinh(z.im))};
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.re.is_zero() && z.im.is_zero()) {
    if (w.re.sign() > 0) return Complex();
    throw DomainError("zero raised to a power with non-positive real part");
  }
  if (z.im.is_zero() && z.re.sign() > 0) return pow(z.re, w);
  return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(1) / pow(z, -n);
  Complex result(1);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Complex pow(const Real& base, const Complex& w) {
  if (base.sign() <= 0) throw DomainError("real power base must be positive");
  Real lb = log(base);
  if (w.im.is_zero()) return Complex(exp(w.re * lb));
  Real mag = exp(w.re * lb);
  Complex e = expi(w.im * lb);
  return {mag * e.re, mag * e.im};
}

Complex inv_pow(unsigned long n, const Complex& s) {
  if (n == 1) return Complex(1);
  Real ln = log_ui(n);
  Real mag = exp(-(s.re * ln));
  if (s.im.is_zero()) return Complex(mag);
  Complex e = expi(-(s.im * ln));
  return {mag * e.re, mag * e.im};
}

std::string to_string(const Complex& z, int digits) {
  return z.re.to_string(digits) + "," + z.im.to_string(digits);
}

}  // namespace zetakit
