#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lerchkit/complex_ops.hpp"
#include "lerchkit/errors.hpp"
#include "lerchkit/options.hpp"

namespace lerchkit {

struct DerivResult {
  complex value{};
  double err_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// m-th derivative of an analytic f at s0 via the Cauchy integral on a circle
// of radius opts.deriv_radius, evaluated by the trapezoid rule (spectrally
// accurate on periodic integrands):
//
//   f^(m)(s0) = m! / (N r^m) sum_j f(s0 + r e^{i theta_j}) e^{-i m theta_j}
//
// Orders 0..2 are supported (order 0 is the circle mean, used for analytic
// smoothing).  f must be analytic on the closed disk |s - s0| <= r.  Nodes
// double until two successive levels agree; previously evaluated nodes are
// reused.  Throws no_convergence_error with the best estimate on failure.
template <class F>
DerivResult cauchy_derivative(F&& f, complex s0, int order, const EvalOptions& opts = {}) {
  opts.validate();
  if (order < 0 || order > 2)
    throw domain_error("cauchy_derivative: order must be 0, 1, or 2");

  const double r = opts.deriv_radius;
  const double fact = (order == 2) ? 2.0 : 1.0;
  const int n_max = opts.deriv_nodes * 8;

  DerivResult res;
  std::vector<complex> vals;  // f at angles 2*pi*j/N, grid refined in place
  vals.reserve(n_max);

  auto f_at = [&](double theta) -> complex {
    complex v = f(s0 + std::polar(r, theta));
    if (!is_finite(v)) throw domain_error("cauchy_derivative: non-finite sample");
    res.evaluations++;
    return v;
  };

  int n = opts.deriv_nodes;
  vals.resize(n);
  for (int j = 0; j < n; ++j) vals[j] = f_at(2.0 * ConstantsTable::pi * j / n);

  auto estimate = [&](int count) -> complex {
    complex acc = 0.0;
    for (int j = 0; j < count; ++j) {
      double theta = 2.0 * ConstantsTable::pi * j / count;
      acc += vals[j] * std::polar(1.0, -order * theta);
    }
    return acc * fact / (double(count) * std::pow(r, order));
  };

  complex prev = estimate(n);
  complex best = prev;
  double best_err = HUGE_VAL;

  while (2 * n <= n_max) {
    // Interleave the old grid with new midpoints: old node j sits at new
    // index 2j, the fresh samples fill the odd indices.
    std::vector<complex> refined(2 * n);
    for (int j = 0; j < n; ++j) refined[2 * j] = vals[j];
    for (int j = 0; j < n; ++j)
      refined[2 * j + 1] = f_at(2.0 * ConstantsTable::pi * (2 * j + 1) / (2 * n));
    vals = std::move(refined);
    n *= 2;

    complex cur = estimate(n);
    double err = std::abs(cur - prev);
    if (err < best_err) {
      best_err = err;
      best = cur;
    }
    if (err <= opts.tolerance_for(std::abs(cur))) {
      res.value = cur;
      res.err_estimate = err;
      res.converged = true;
      return res;
    }
    prev = cur;
  }

  throw no_convergence_error("cauchy_derivative: node cap reached", best, best_err);
}

}  // namespace lerchkit
