#include "zgen/analysis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace zgen {

namespace {

Real abs_r(const Real& x) { return x < 0 ? Real(-x) : x; }

}  // namespace

VarphiEval varphi_int(std::size_t n) {
  if (n == 0) throw std::invalid_argument("varphi_int: n must be positive");
  VarphiEval out;
  out.n = n;
  out.value = 0;
  for (std::size_t k = 1; k < n; ++k) {
    BigInt sum = 0;
    BigInt power = 1;
    for (std::size_t i = 0; i < n - k; ++i) {
      sum += power;
      power *= k;
    }
    if (sum > out.value) {
      out.value = sum;
      out.k_star = k;
    }
  }
  return out;
}

Real phi_fn(const Real& m, const Real& x) {
  if (x == 1) return m - 1;
  return (pow(x, m - x) - 1) / (x - 1);
}

Real phi_fn_slope(const Real& m, const Real& x) {
  return pow(x, m - x) * (m - x - m / x - (x - 1) * log(x)) + 1;
}

PhiEval phi_real(std::size_t n, double tol) {
  if (n == 0) throw std::invalid_argument("phi_real: n must be positive");
  if (!(tol > 0)) throw std::invalid_argument("phi_real: tol must be positive");
  PhiEval out;
  out.n = n;
  if (n == 1) {
    out.x_star = 1;
    out.value = 0;
    out.boundary = true;
    return out;
  }
  const Real m = n;
  Real a = Real(1) + Real(1e-12);
  Real b = m;
  constexpr int kMaxIter = 200;
  if (phi_fn_slope(m, a) > 0) {
    // slope > 0 at a, slope(n) = -(n-1) ln n < 0, single sign change.
    for (int it = 0; it < kMaxIter && b - a > Real(1e-45); ++it) {
      Real mid = (a + b) / 2;
      if (phi_fn_slope(m, mid) > 0) {
        a = mid;
      } else {
        b = mid;
      }
    }
    out.x_star = (a + b) / 2;
    out.value = phi_fn(m, out.x_star);
    out.error = abs_r(phi_fn(m, a) - phi_fn(m, b)) + out.value * Real(1e-45);
  } else {
    // No sign change near 1: golden-section search, then compare with the
    // boundary limit n - 1.
    const Real g = (sqrt(Real(5)) - 1) / 2;
    Real c = b - g * (b - a);
    Real d = a + g * (b - a);
    for (int it = 0; it < kMaxIter && b - a > Real(1e-40); ++it) {
      if (phi_fn(m, c) > phi_fn(m, d)) {
        b = d;
      } else {
        a = c;
      }
      c = b - g * (b - a);
      d = a + g * (b - a);
    }
    Real x = (a + b) / 2;
    Real v = phi_fn(m, x);
    if (m - 1 >= v) {
      out.x_star = 1;
      out.value = m - 1;
      out.boundary = true;
    } else {
      out.x_star = x;
      out.value = v;
      out.error = abs_r(phi_fn(m, a) - phi_fn(m, b)) + v * Real(1e-40);
    }
  }
  if (out.error > out.value * Real(tol)) throw std::runtime_error("phi_real: did not converge");
  return out;
}

Real lambert_w(const Real& x, double tol) {
  if (!(x > 0)) throw std::domain_error("lambert_w: x must be positive");
  Real w;
  if (x > 3) {
    Real L = log(x);
    w = L - log(L);
  } else {
    w = log1p(x) / 2;
  }
  for (int it = 0; it < 100; ++it) {
    Real ew = exp(w);
    Real f = w * ew - x;
    if (abs_r(f) <= Real(tol) * x) break;
    Real wp1 = w + 1;
    Real step = f / (ew * wp1 - (w + 2) * f / (2 * wp1));
    w -= step;
    if (abs_r(step) <= abs_r(w) * Real(1e-48)) break;
  }
  return w;
}

Real lambert_w_series(const Real& x) {
  if (!(x > boost::math::constants::e<Real>())) throw std::domain_error("lambert_w_series: x must exceed e");
  const Real L = log(x);
  const Real l = log(L);
  return L - l + l / L + l * (l - 2) / (2 * L * L) + l * (6 - 9 * l + 2 * l * l) / (6 * pow(L, 3)) +
         l * (-12 + 36 * l - 22 * l * l + 3 * pow(l, 3)) / (12 * pow(L, 4));
}

PsiMax psi_max(const Real& n) {
  if (!(n > 0)) throw std::domain_error("psi_max: n must be positive");
  const Real w = lambert_w(n * boost::math::constants::e<Real>());
  return {n / w, n * w - 2 * n + n / w};
}

BoundInterval phi_asymptotic_bounds(std::size_t n) {
  if (n < 2) throw std::invalid_argument("phi_asymptotic_bounds: n must be at least 2");
  BoundInterval out;
  out.n = n;
  const Real m = n;
  const Real ne = m * boost::math::constants::e<Real>();
  out.w_ne = lambert_w(ne);
  const Real& w = out.w_ne;
  out.lower = m * w - 2 * m + m / w + w / m;
  out.upper = out.lower + log(log(ne)) / m;
  out.x_lo = m / log(m) + 1;
  out.x_hi = m / w;
  out.in_validity_range = n >= 51;
  return out;
}

FactorialBounds ln_factorial_bounds(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ln_factorial_bounds: n must be positive");
  using boost::math::constants::pi;
  FactorialBounds out;
  out.n = n;
  const Real m = n;
  const Real ln_n = log(m);
  const Real base = m * ln_n - m + ln_n / 2;
  const Real c_true = log(2 * pi<Real>()) / 2;
  const Real c_printed = log(Real(2)) / 2;
  out.lower = base + c_true + 1 / (12 * m + 1);
  out.upper = base + ln_n / m + c_true + 1 / (12 * m);
  out.printed_lower = base + c_printed + 1 / (12 * m + 1);
  out.printed_upper = base + ln_n / m + c_printed + 1 / (12 * m);
  if (n >= 3) out.ln_phi_upper = phi_asymptotic_bounds(n - 1).upper;
  return out;
}

WeightParams weight_params(std::size_t n, double tol) {
  if (n < 2) throw std::invalid_argument("weight_params: n must be at least 2");
  WeightParams out;
  out.n = n;
  const PhiEval p = phi_real(n, tol);
  out.lambda = p.x_star;
  out.phi_at_lambda = p.value;
  out.anomalous = n < 4 || p.boundary;
  const Real& l = out.lambda;
  if (p.boundary) {
    // Limits at lambda -> 1.
    out.c_lambda = 1;
    out.c_at_rounded_lambda = 1;
    out.comparison = Real(n) - 1;
    return out;
  }
  out.c_lambda = pow(l, Real(n) - l) * log(l) / (l - 1);
  const Real l2 = round(l * 100) / 100;
  out.c_at_rounded_lambda = pow(l2, Real(n) - l2) * log(l2) / (l2 - 1);
  out.comparison = (pow(l, Real(n) - 1) - 1) / (l - 1);
  if (n >= 4 && out.c_lambda > out.comparison) {
    throw std::logic_error("weight_params: c_lambda exceeds (lambda^(n-1) - 1)/(lambda - 1)");
  }
  return out;
}

Real xi(std::size_t n, const Real& lambda, const Real& c, const Real& x) {
  return (x - lambda) * c + (pow(lambda, Real(n) - x) - 1) / (lambda - 1);
}

Real xi_argmin(std::size_t n, const Real& lambda, const Real& c) {
  const Real ll = log(lambda);
  return Real(n) + (log(ll) - log(lambda - 1) - log(c)) / ll;
}

Real zeta(std::size_t n, const Real& lambda, const Real& c) { return xi(n, lambda, c, xi_argmin(n, lambda, c)); }

CrucialReport crucial_inequality_check(std::size_t n) {
  if (n < 4) throw std::invalid_argument("crucial_inequality_check: n must be at least 4");
  CrucialReport out;
  out.n = n;
  out.params = weight_params(n);
  const Real& l = out.params.lambda;
  const Real& c = out.params.c_lambda;
  const Real& phi = out.params.phi_at_lambda;
  // lambda and phi carry about 1e-40 relative error.
  out.tolerance = Real(1e-30) * std::max(Real(1), phi);
  out.ok = true;
  for (std::size_t k = 2; k < n; ++k) {
    CrucialRow row;
    row.k = k;
    row.lhs = (-phi + (pow(l, Real(n - k)) - 1) / (l - 1) + Real(k) * c) / l;
    row.rhs = c;
    row.ok = row.lhs >= row.rhs - out.tolerance;
    out.ok = out.ok && row.ok;
    out.rows.push_back(row);
  }
  out.x_c = xi_argmin(n, l, c);
  out.zeta_residual = abs_r(zeta(n, l, c) - phi_fn(Real(n), l));
  out.ok = out.ok && out.zeta_residual <= out.tolerance;
  return out;
}

Real weight(const NatVec& f, const Real& lambda) {
  std::vector<Entry> e = f.entries();
  std::sort(e.begin(), e.end(), std::greater<>());
  Real sum = 0;
  Real power = 1;
  for (Entry v : e) {
    sum += power * Real(v);
    power *= lambda;
  }
  return sum;
}

}  // namespace zgen
