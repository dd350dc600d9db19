#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <utility>

#include "lerchkit/complex_ops.hpp"
#include "lerchkit/errors.hpp"
#include "lerchkit/options.hpp"

namespace lerchkit {

struct QuadResult {
  complex value{};
  double err_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

// Abscissa/weight of the exp-sinh map x = exp((pi/2) sinh t) on [0, inf).
// dx/dt = (pi/2) cosh(t) x(t).
inline void exp_sinh_node(double t, double& x, double& w) {
  double u = 0.5 * ConstantsTable::pi * std::sinh(t);
  x = std::exp(u);
  w = 0.5 * ConstantsTable::pi * std::cosh(t) * x;
}

}  // namespace detail

// Double-exponential (exp-sinh) quadrature of f over [0, inf).
//
// Handles integrable algebraic endpoint singularities x^(alpha-1), alpha > 0,
// and algebraic or exponential decay at infinity.  The weighted integrand
// f(x(t)) dx/dt must stay within double range on |t| <= 6.8 (x spans roughly
// [1e-300, 1e300]); a NaN from the integrand raises domain_error.  When the
// level cap is reached without meeting the tolerance, throws
// no_convergence_error carrying the best estimate.
template <class F>
QuadResult quad_semi_infinite(F&& f, const EvalOptions& opts = {}) {
  opts.validate();

  // |sinh t| <= 2*699/pi keeps exp((pi/2) sinh t) inside double range.
  const double t_max = std::asinh(2.0 * 699.0 / ConstantsTable::pi);

  QuadResult res;
  auto eval = [&](double t) -> complex {
    double x, w;
    detail::exp_sinh_node(t, x, w);
    complex v = f(x);
    if (std::isnan(v.real()) || std::isnan(v.imag()))
      throw domain_error("quad_semi_infinite: integrand returned NaN");
    return w * v;
  };

  // Level 0: trapezoid with h = 0.5.  We sweep outward from t = 0 in each
  // direction and stop once several consecutive weighted terms are
  // negligible, so rapidly decaying integrands never pay for the full range.
  const double h0 = 0.5;
  const double term_floor = 1e-320;
  complex sum = eval(0.0);
  res.evaluations++;
  for (int dir : {+1, -1}) {
    int quiet = 0;
    for (int k = 1; k * h0 <= t_max; ++k) {
      complex g = eval(dir * k * h0);
      res.evaluations++;
      sum += g;
      if (std::abs(g) < term_floor * (1.0 + std::abs(sum)))
        quiet++;
      else
        quiet = 0;
      if (quiet >= 3) break;
    }
  }

  complex prev = h0 * sum;
  double best_err = std::abs(prev);
  complex best = prev;

  double h = h0;
  for (int level = 1; level <= opts.quad_levels; ++level) {
    h *= 0.5;
    // New midpoints at odd multiples of h.
    complex mid = 0.0;
    for (int dir : {+1, -1}) {
      int quiet = 0;
      for (int k = (dir > 0) ? 1 : -1; std::abs(k) * h <= t_max; k += 2 * dir) {
        complex g = eval(k * h);
        res.evaluations++;
        mid += g;
        if (std::abs(g) < term_floor * (1.0 + std::abs(mid)))
          quiet++;
        else
          quiet = 0;
        if (quiet >= 3) break;
      }
    }
    complex cur = 0.5 * prev + h * mid;
    double err = std::abs(cur - prev);
    prev = cur;
    if (err < best_err) {
      best_err = err;
      best = cur;
    }
    if (level >= 2 && err <= opts.tolerance_for(std::abs(cur))) {
      res.value = cur;
      res.err_estimate = err;
      res.converged = true;
      return res;
    }
  }

  throw no_convergence_error("quad_semi_infinite: level cap reached", best, best_err);
}

}  // namespace lerchkit
