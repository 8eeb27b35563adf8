#pragma once

#include <ostream>

#include "zetakit/complex.hpp"

namespace zetakit {

// gtest printers
inline void PrintTo(const Real& x, std::ostream* os) { *os << x.to_string(12); }
inline void PrintTo(const Complex& z, std::ostream* os) { *os << to_string(z, 12); }

}  // namespace zetakit

namespace testutil {

using zetakit::Complex;
using zetakit::Real;

inline Real R(const char* text) {
  zetakit::PrecisionScope scope(600);
  return Real::parse(text);
}

inline Complex C(const char* re, const char* im = "0") { return Complex(R(re), R(im)); }

inline Real dist(const Complex& a, const Complex& b) {
  zetakit::PrecisionScope scope(600);
  return abs(a - b);
}

}  // namespace testutil
