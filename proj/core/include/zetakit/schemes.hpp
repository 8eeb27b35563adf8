#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/chi.hpp"
#include "zetakit/complex.hpp"
#include "zetakit/precision.hpp"
#include "zetakit/primes.hpp"
#include "zetakit/reference.hpp"

namespace zetakit {

// eta(k) for an integer k >= 1 (eta(1) = ln 2).
Real eta_integer(unsigned long k, const PrecisionContext& ctx);

// ---- plain alternating series ------------------------------------------

// zeta(s) from the first N terms of sum (-1)^(n+1) n^-s, divided by 1 - 2^(1-s).
EvalResult dirichlet_partial(const Complex& s, std::size_t N, const PrecisionContext& ctx);

// ---- binomial expansions ----------------------------------------------

// eta(s) = 1 + sum_{n>=1} (n-s)!/(n!(1-s)!) chi(n), summed to n_max with chi
// read from the table (n_max <= table.n_max()).
EvalResult eta_binomial16(const Complex& s, const ChiTable& table, std::size_t n_max);
EvalResult eta_binomial16(const Complex& s, std::size_t n_max, const PrecisionContext& ctx);

// n-th summand of the binomial series in three equivalent forms. The n = 1
// summand includes the leading constant, so all three agree term by term:
//   chi form        1 + chi(1),  then (n-s)!/(n!(1-s)!) chi(n) via log-gamma
//   product form    eta(2),      then chi(n)/n! prod_{j=2..n} (j-s)
//   eta(k) form     (n-s)!/(1-s)! sum_k (-1)^k eta(k+2)/(k!(n-k-1)!)
Complex binomial_term_chi(const Complex& s, unsigned long n, const PrecisionContext& ctx);
Complex binomial_term_product(const Complex& s, unsigned long n, const PrecisionContext& ctx);
Complex binomial_term_eta(const Complex& s, unsigned long n, const PrecisionContext& ctx);

struct Double28Result {
  EvalResult result;
  Real max_intermediate;       // largest |partial inner sum| seen
  long cancellation_bits = 0;  // log2(max_intermediate / |final term|), worst n
};

// Binomial series with chi(n) expanded through eta(k+2). Needs bits >= 2 n_max,
// otherwise PrecisionError.
Double28Result eta_double28(const Complex& s, std::size_t n_max, const PrecisionContext& ctx);

// zeta(s) = 1/(s-1) + 1 + sum_{n>=1} (n-s)!/(n!(1-s)!) (psi(n) - 1) with
// psi(n) = sum_{j>=2} n/j^2 (1-1/j)^(n-1).
EvalResult zeta_binomial16_2(const Complex& s, std::size_t n_max, const PrecisionContext& ctx);
// psi(n) - 1
Real psi_minus_one(unsigned long n, const PrecisionContext& ctx);

// ---- interpolation on eta at integers ---------------------------------

// (m+2-s)!/(m!(1-s)!) sum_{k=0..m} C(m,k) (-1)^k eta(k+2)/(k+2-s).
EvalResult eta_melzak29(const Complex& s, std::size_t m, const PrecisionContext& ctx);

// With u = s/(2L):
// (m+1+J-u)!/(m!(J-u)!) sum_{k=0..m} C(m,k) (-1)^k eta(2L(k+J+1))/(k+J+1-u).
// J >= 0, L >= 1. The melzak29 form is the same sum with 2L = 1, J = 1.
EvalResult eta_generalized30(const Complex& s, std::size_t m, long J, long L, const PrecisionContext& ctx);

// ---- Euler products over odd integers ---------------------------------

// Sum over odd o in [p_{k+1}, 2n-1] coprime to 3, 5, ..., p_k of o^-s, with
// the leading 1 and the (2n-1)^(1-s)/(1-s) prod (1-1/p_j) correction, divided by
// prod_{j<=k} (1 - p_j^-s). Tends to zeta(s) on Re(s) > 0.
Complex euler_product_generalized(const Complex& s, long k, std::size_t n, const PrimeList& primes,
                                  const PrecisionContext& ctx);

// |1 + sum o^-s| / |1 + sum o^(s-1)| over the same odd integers as above,
// for 0 < Re(s) <= 1/2.
Real norm_ratio15(const Complex& s, long k, std::size_t n, const PrimeList& primes, const PrecisionContext& ctx);
// |s|/|1-s| (2n-1)^(1-2 Re(s))
Real norm_ratio15_rhs(const Complex& s, std::size_t n, const PrecisionContext& ctx);

// ---- periodic-coefficient schemes --------------------------------------

// Coefficients c_r on odd residues r = 1, 3, ..., 4k-3 modulo 2(2k-1):
// 1 everywhere except 1-(2k-1) at r = 2k-1.
std::vector<long> fast31_coefficients(long k);

// zeta(s) from N_periods full periods of sum c(o) o^-s over odd o, divided by
// (1 - (2k-1)^(1-s))(1 - 2^-s). terms_used counts odd terms.
EvalResult fast_scheme31(const Complex& s, long k, std::size_t N_periods, const PrecisionContext& ctx);

// [1-(2k-1)^(s-1)](2^s-1) zeta(s)
Complex lhs31(const Complex& s, long k, const PrecisionContext& ctx);
// sum_{n=2..N} [1 - sum_{j=1..2k-1} (2j-1)^n/(2k-1)^(n+1)] Gamma(n+s)/(2^n n! Gamma(s)) zeta(n+s)
Complex rhs31(const Complex& s, long k, std::size_t N, const PrecisionContext& ctx);

struct ExactRational {
  std::string numerator;
  std::string denominator;
  std::string str() const;  // "p/q", or "p" when q = 1
  Real to_real() const;     // at the current working precision
};

struct CombinedCoefficients {
  std::vector<long> k_set;
  long n_kill = 0;
  // Multiplier of (2M_i)^s S_i where S_i is the periodic series for k_i and M_i = 2k_i - 1.
  std::vector<ExactRational> a;
  // b_i = a_i M_i, normalized so b_1 = 1; the zeta prefactor is
  // (2^s - 1) sum_i b_i (M_i^(s-1) - 1).
  std::vector<ExactRational> b;
  // sum_i a_i W_i(n)/(2M_i)^n for n = 0..n_kill, W_i(n) = sum_{odd r<2M_i} r^n - M_i^(n+1).
  std::vector<ExactRational> kill_residuals;
};

// Exact rational null vector of the kill system. SingularSystemError unless
// the null space is one-dimensional with a_1 != 0.
CombinedCoefficients combined_coefficients(const std::vector<long>& k_set, long n_kill);

// Combined periodic series. terms_per_series counts odd terms of each series.
EvalResult combined_scheme37(const Complex& s, const std::vector<long>& k_set, long n_kill,
                             const std::vector<std::size_t>& terms_per_series, const PrecisionContext& ctx);

// ---- dispatch ------------------------------------------------------------

enum class SchemeKind { dirichlet, binomial16, double28, melzak29, generalized30, zeta16_2, euler_product, fast31, combined37 };

std::string to_string(SchemeKind kind);
std::optional<SchemeKind> parse_scheme_kind(const std::string& name);
// True for schemes whose native value is eta(s).
bool scheme_returns_eta(SchemeKind kind);

struct SchemeSpec {
  SchemeKind kind = SchemeKind::dirichlet;
  std::size_t m_or_terms = 0;
  std::optional<long> k;                      // euler_product, fast31
  std::optional<long> J;                      // generalized30
  std::optional<long> L;                      // generalized30
  std::vector<long> k_set;                    // combined37
  std::vector<std::size_t> terms_per_series;  // combined37
  std::optional<long> N;                      // combined37: n_kill

  // DomainError when a parameter is missing or present for a kind that does not use it.
  void validate() const;
};

EvalResult evaluate(const SchemeSpec& spec, const Complex& s, const PrecisionContext& ctx);

}  // namespace zetakit
