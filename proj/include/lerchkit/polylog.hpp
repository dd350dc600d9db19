#pragma once

#include <complex>

#include "lerchkit/complex_ops.hpp"
#include "lerchkit/lerch.hpp"

namespace lerchkit {

// Polylogarithm Li_s(z) = sum_{n>=1} z^n / n^s = z Phi(z, s, 1) on the
// closed unit disk (z = 1 needs Re s > 1).
inline complex polylog(complex s, complex z, const EvalOptions& opts = {}) {
  if (!is_finite(z)) throw domain_error("polylog: non-finite argument");
  if (z == complex(0.0)) return 0.0;
  return z * phi(z, s, complex(1.0), opts).value;
}

// d^order/ds^order Li_s(z) at s = s0, order in {1, 2}.
inline complex polylog_sderiv(complex s0, complex z, int order, const EvalOptions& opts = {}) {
  if (!is_finite(z)) throw domain_error("polylog_sderiv: non-finite argument");
  if (z == complex(0.0)) return 0.0;
  return z * phi_sderiv(z, s0, complex(1.0), order, opts).value;
}

}  // namespace lerchkit
