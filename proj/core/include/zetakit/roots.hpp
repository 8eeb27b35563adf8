#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/complex.hpp"
#include "zetakit/precision.hpp"
#include "zetakit/reference.hpp"

namespace zetakit {

// prod_j (a_j - 1 + s) + prod_j (a_j - s). Roots lie on Re(s) = 1/2 when the
// nonzero a_j - 1/2 share one sign.
struct SymmetrizedFactorial {
  std::vector<Real> nodes;

  // HypothesisError unless some a_j != 1/2 and the nonzero a_j - 1/2 share a sign.
  void validate() const;
  Complex operator()(const Complex& s) const;
};

enum class RootFamily { nu, tau, T, theta, phi, lambda, omega, Omega, tan49 };
std::string to_string(RootFamily f);

struct RootList {
  RootFamily family = RootFamily::tau;
  std::size_t m = 0;
  std::vector<Real> values;     // ascending
  std::vector<Real> residuals;  // normalized |F| at each root
};

// Positive x with F(1/2 + ix) = 0, ascending.
RootList sym_roots(const SymmetrizedFactorial& sf, const PrecisionContext& ctx);

// n -> roots of prod_{j=0..n-2} (j+2-s) + prod_{j=0..n-2} (j+1+s), n = 3..n_max.
std::map<std::size_t, RootList> nu_table(std::size_t n_max, const PrecisionContext& ctx);

// (1/2) |tan((2k-1) pi/(2n))|, k = 1..floor(n/2): critical-line zeros of (1-s)^n + s^n.
RootList tan_zeros49(std::size_t n, const PrecisionContext& ctx);

// Roots T_j of sum_k c_k [prod_{j!=k} (a_j-1+s) + prod_{j!=k} (a_j-s)] on the
// critical line. Coefficients must share one sign (zeros allowed); otherwise
// HypothesisError.
RootList combined_roots(const std::vector<Real>& c, const std::vector<Real>& nodes, const PrecisionContext& ctx);
Complex combined_value(const std::vector<Real>& c, const std::vector<Real>& nodes, const Complex& s);

struct ThetaPhi {
  std::size_t m = 0;
  RootList theta;    // even-k combination
  RootList phi;      // odd-k combination
  Real weight_even;  // sum_{k even} eta(k+2)/(k!(m-k)!)
  Real weight_odd;   // sum_{k odd}  eta(k+2)/(k!(m-k)!)
};

// Combinations over nodes a_j = j+2, j = 0..m, with the even-k and odd-k
// coefficients eta(k+2)/(k!(m-k)!) grouped separately. m >= 4 even.
ThetaPhi theta_phi_roots(std::size_t m, const PrecisionContext& ctx);
// 2 W_e prod (y + Theta_j^2) - 2 W_o prod (y + Phi_j^2), y = (s-1/2)^2.
Complex theta_phi_reconstruct(const ThetaPhi& tp, const Complex& s, const PrecisionContext& ctx);

struct ShiftVector {
  std::size_t m = 0;
  std::vector<Real> d;             // root j of f_d is j + 2 + d_j
  std::vector<bool> parity_ok;     // 0 < d_j < 1/2 for odd j, 1/2 < d_j < 1 for even j
  bool all_in_unit = true;         // every 0 < d_j < 1
  bool ordering_ok = true;         // all parity flags hold
  std::vector<std::string> findings;
};

// Real roots of f_d(s) = sum_k eps_k prod_{j!=k} (j+2-s), one per (j+2, j+3).
// m >= 4 even. RootCountError if a bracket loses its sign change.
ShiftVector d_shifts(std::size_t m, const PrecisionContext& ctx);

struct InterlaceReport {
  std::string left_family = "lambda";
  std::string right_family = "omega";
  std::string pattern;       // families in order of increasing square, e.g. "LWLW"
  bool strict = false;       // alternates with every gap > 0
  std::string orientation;   // "lambda-first", "omega-first" or "none"
  Real min_gap;              // smallest gap between neighbours of different families
  std::size_t first_break = 0;  // index in pattern of the first non-alternation, or pattern size
};

struct LambdaOmega {
  std::size_t m = 0;
  RootList lambda;
  RootList omega;
  InterlaceReport interlace;
};

// lambda_j: sum_{j<m} arctan(x/(j+2)) = (2k+1) pi/2; omega_j: the same with
// offsets j + 3/2 + d_j.
LambdaOmega lambda_omega(std::size_t m, const ShiftVector& d, const PrecisionContext& ctx);
InterlaceReport interlace(const RootList& left, const RootList& right);

struct OmegaResult {
  std::size_t m = 0;
  RootList omega;                   // real Omega_j ascending
  std::vector<Complex> complex_omega;  // non-real Omega values, conjugate pairs
  bool complex_root_finding = false;   // some roots are not real
  Real chi_m1;                      // chi(m+1)
  Real lead;                        // 2 chi(m+1)/(m+1)!
  std::optional<Real> omega1;       // smallest real Omega
  bool omega1_negative = false;
  bool omega1_le_quarter = false;   // Omega_1 <= -1/4
  bool interlace84 = false;         // -lambda^2 / -Omega alternation in y
  std::vector<std::string> findings;
};

// Roots -Omega_j of A prod (y + omega_j^2) - B prod (y + lambda_j^2), with
// A = 2 chi(m+1)/(m+1)! + B and B = 2 pi/((m-1)/2)!^2. m >= 8 even.
OmegaResult omega_caps(std::size_t m, const PrecisionContext& ctx);
OmegaResult omega_caps(std::size_t m, const LambdaOmega& lo, const PrecisionContext& ctx);

struct SymReconstruction {
  EvalResult difference_form;  // two symmetrized factorials with shifted and half-integer nodes
  EvalResult product_form;     // 2 chi(m+1)/(m+1)! prod (y + Omega_j)
  Complex reference;           // eta_ref(s) + eta_ref(1-s)
  Real deviation_difference;
  Real deviation_product;
  Real form_gap;               // |difference_form - product_form|
};

// 0 < Re(s) < 1, m even >= 8.
SymReconstruction reconstruct_eta_sym(const Complex& s, std::size_t m, const PrecisionContext& ctx);

// Precision used by the root families at a given m: bits >= 2m + 128 once m >= 32.
PrecisionContext family_context(std::size_t m, const PrecisionContext& ctx);

}  // namespace zetakit
