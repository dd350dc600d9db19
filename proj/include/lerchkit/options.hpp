#pragma once

#include <cmath>
#include <stdexcept>

namespace lerchkit {

// Shared evaluation knobs.  Every public entry point takes one of these;
// the defaults target ~1e-12 absolute accuracy at desk scale.
struct EvalOptions {
  double abs_tol = 1e-12;     // absolute tolerance on the returned value
  double rel_tol = 1e-12;     // relative tolerance on the returned value
  int max_terms = 100000;     // series-length cap (direct and accelerated)
  int quad_levels = 10;       // max bisection levels in quadrature
  double deriv_radius = 0.25; // contour radius for Cauchy derivatives
  int deriv_nodes = 32;       // initial node count on the derivative contour

  // Throws std::invalid_argument on out-of-range settings.
  void validate() const {
    if (!(std::isfinite(abs_tol) && abs_tol > 0.0))
      throw std::invalid_argument("EvalOptions: abs_tol must be finite and > 0");
    if (!(std::isfinite(rel_tol) && rel_tol >= 0.0))
      throw std::invalid_argument("EvalOptions: rel_tol must be finite and >= 0");
    if (max_terms < 16)
      throw std::invalid_argument("EvalOptions: max_terms must be >= 16");
    if (quad_levels < 3 || quad_levels > 16)
      throw std::invalid_argument("EvalOptions: quad_levels must be in [3, 16]");
    if (!(std::isfinite(deriv_radius) && deriv_radius > 0.0 && deriv_radius < 1.0))
      throw std::invalid_argument("EvalOptions: deriv_radius must be in (0, 1)");
    if (deriv_nodes < 8 || deriv_nodes % 2 != 0)
      throw std::invalid_argument("EvalOptions: deriv_nodes must be even and >= 8");
  }

  // Mixed tolerance for a value of the given magnitude.
  double tolerance_for(double magnitude) const {
    double t = abs_tol + rel_tol * magnitude;
    return std::isfinite(t) ? t : abs_tol;
  }
};

}  // namespace lerchkit
