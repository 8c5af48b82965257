#ifndef ZGEN_ANALYSIS_HPP_
#define ZGEN_ANALYSIS_HPP_

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "zgen/nvec.hpp"
#include "zgen/rational.hpp"

namespace zgen {

// About 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

// varphi(n) = max over 0 < k < n of sum_{i<n-k} k^i; varphi(1) = 0.
struct VarphiEval {
  std::size_t n = 0;
  // Smallest maximizing k; 0 for n = 1.
  std::size_t k_star = 0;
  BigInt value;
};
VarphiEval varphi_int(std::size_t n);

// (x^{m-x} - 1)/(x - 1) with its limit m - 1 at x = 1.
Real phi_fn(const Real& m, const Real& x);
// (x-1)^2 times the derivative of phi_fn(m, .); same sign as the derivative.
Real phi_fn_slope(const Real& m, const Real& x);

// phi(n) = sup over 1 < x < n of phi_fn(n, x); phi(1) = 0.
struct PhiEval {
  std::size_t n = 0;
  Real x_star;
  Real value;
  // Bound on |value - phi(n)|.
  Real error;
  // The supremum is the limit at x -> 1 (n <= 3), not an interior maximum.
  bool boundary = false;
};
PhiEval phi_real(std::size_t n, double tol = 1e-13);

// Principal branch, x > 0. Halley iteration.
Real lambert_w(const Real& x, double tol = 1e-40);
// Asymptotic expansion in L = ln x, l = ln ln x through the (l/L)^4 term; x > e.
Real lambert_w_series(const Real& x);

// Maximum of ln(x^{n-x}) = (n-x) ln x over x > 0; n may be any positive real.
struct PsiMax {
  Real x_psi;
  Real ln_value;
};
PsiMax psi_max(const Real& n);

// Two-sided bound on ln phi(n+1), proven for n >= 51.
struct BoundInterval {
  std::size_t n = 0;
  Real w_ne;
  Real lower;
  Real upper;
  // Bracket n/ln n + 1 < x* < n/W(ne) for the argmax of phi_fn(n+1, .).
  Real x_lo;
  Real x_hi;
  bool in_validity_range = false;
};
BoundInterval phi_asymptotic_bounds(std::size_t n);

// Robbins-style bounds with the constant ln(2 pi)/2. The printed_* variants
// use ln(2)/2 instead; printed_upper falls below ln n! (n = 10: 14.76 < 15.10).
struct FactorialBounds {
  std::size_t n = 0;
  Real lower;
  Real upper;
  Real printed_lower;
  Real printed_upper;
  // Upper bound on ln phi(n) from phi_asymptotic_bounds(n - 1); needs n >= 52.
  Real ln_phi_upper;
};
FactorialBounds ln_factorial_bounds(std::size_t n);

struct WeightParams {
  std::size_t n = 0;
  Real lambda;
  Real c_lambda;
  // c evaluated at lambda rounded to two decimals. Published rounded tables
  // list this value, which differs from c_lambda by up to 0.13 at n = 8.
  Real c_at_rounded_lambda;
  Real phi_at_lambda;
  // (lambda^{n-1} - 1)/(lambda - 1), which must dominate c_lambda for n >= 4.
  Real comparison;
  // n < 4: the weight argument does not apply and lambda is a boundary point.
  bool anomalous = false;
};
// Throws std::logic_error if c_lambda exceeds the comparison value for n >= 4.
WeightParams weight_params(std::size_t n, double tol = 1e-13);

// xi_c(x) = (x - lambda) c + (lambda^{n-x} - 1)/(lambda - 1).
Real xi(std::size_t n, const Real& lambda, const Real& c, const Real& x);
// The minimizer of xi_c.
Real xi_argmin(std::size_t n, const Real& lambda, const Real& c);
// zeta(c) = xi_c(xi_argmin).
Real zeta(std::size_t n, const Real& lambda, const Real& c);

struct CrucialRow {
  std::size_t k = 0;
  // (1/lambda)(-phi(n) + (lambda^{n-k} - 1)/(lambda - 1) + k c_lambda).
  Real lhs;
  Real rhs;
  bool ok = false;
};
struct CrucialReport {
  std::size_t n = 0;
  WeightParams params;
  std::vector<CrucialRow> rows;
  Real x_c;
  // |zeta(c_lambda) - phi_fn(n, lambda)|.
  Real zeta_residual;
  Real tolerance;
  bool ok = false;
};
CrucialReport crucial_inequality_check(std::size_t n);

// min over sigma of sum lambda^i f(sigma(i)): f sorted descending against
// increasing powers.
Real weight(const NatVec& f, const Real& lambda);

}  // namespace zgen

#endif  // ZGEN_ANALYSIS_HPP_
