#pragma once

#include <complex>

#include "lerchkit/complex_ops.hpp"
#include "lerchkit/contour_derivative.hpp"
#include "lerchkit/hurwitz_zeta.hpp"

namespace lerchkit {

struct StieltjesValue {
  int order = 0;
  complex a{};
  complex value{};
  double err_estimate = 0.0;
};

// Generalized Stieltjes constant gamma_n(a), the Laurent coefficients of the
// Hurwitz zeta at s = 1:
//
//   zeta(s, a) = 1/(s-1) + sum_{n>=0} (-1)^n gamma_n(a) (s-1)^n / n!
//
// so gamma_n(a) = (-1)^n g^(n)(1) with g(s) = zeta(s, a) - 1/(s-1), which is
// entire in s.  g is sampled on a Cauchy contour around s = 1 (order 0 uses
// the circle mean).  Supported orders: 0, 1, 2.  gamma_0(a) = -psi(a) gives
// an independent cross-check.
inline StieltjesValue stieltjes_value(int order, complex a, const EvalOptions& opts = {}) {
  opts.validate();
  if (order < 0 || order > 2) throw domain_error("stieltjes: order must be 0, 1, or 2");
  if (near_nonpos_int(a)) throw pole_error("stieltjes: a at a nonpositive integer");

  auto g = [&](complex s) { return hurwitz_zeta(s, a, opts) - 1.0 / (s - 1.0); };
  DerivResult d = cauchy_derivative(g, complex(1.0), order, opts);
  double sign = (order % 2 == 0) ? 1.0 : -1.0;
  return {order, a, sign * d.value, d.err_estimate};
}

inline complex stieltjes(int order, complex a, const EvalOptions& opts = {}) {
  return stieltjes_value(order, a, opts).value;
}

}  // namespace lerchkit
