#pragma once

#include <cmath>
#include <complex>

#include "lerchkit/complex_ops.hpp"
#include "lerchkit/constants.hpp"
#include "lerchkit/errors.hpp"

namespace lerchkit {

namespace detail {

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's set); relative
// error below ~1e-13 for Re z > 0.5.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

inline complex lanczos_series(complex zm1) {
  complex x = lanczos_c[0];
  for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (zm1 + double(i));
  return x;
}

}  // namespace detail

// Gamma function on the complex plane, poles at nonpositive integers.
inline complex gamma(complex z) {
  if (!is_finite(z)) throw domain_error("gamma: non-finite argument");
  if (near_nonpos_int(z)) throw pole_error("gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return ConstantsTable::pi / (std::sin(ConstantsTable::pi * z) * gamma(1.0 - z));
  }
  complex zm1 = z - 1.0;
  complex x = detail::lanczos_series(zm1);
  complex t = zm1 + detail::lanczos_g + 0.5;
  return ConstantsTable::sqrt_two_pi * pow_principal(t, zm1 + 0.5) * std::exp(-t) * x;
}

// log Gamma(z), real on the positive real axis.  For Re z >= 0.5 this is the
// principal-branch log of the Lanczos factors (t and the rational part both
// stay in the right half-plane); for Re z < 0.5 it is continued by the
// reflection formula, which may differ from log(gamma(z)) by 2 pi i.
inline complex log_gamma(complex z) {
  if (!is_finite(z)) throw domain_error("log_gamma: non-finite argument");
  if (near_nonpos_int(z)) throw pole_error("log_gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    complex s = std::sin(ConstantsTable::pi * z);
    if (s == complex(0.0)) throw pole_error("log_gamma: pole at nonpositive integer");
    return std::log(ConstantsTable::pi) - log_principal(s) - log_gamma(1.0 - z);
  }
  complex zm1 = z - 1.0;
  complex x = detail::lanczos_series(zm1);
  complex t = zm1 + detail::lanczos_g + 0.5;
  return std::log(ConstantsTable::sqrt_two_pi) + (zm1 + 0.5) * log_principal(t) - t +
         log_principal(x);
}

// Digamma psi(z) = Gamma'(z)/Gamma(z).  Upward recurrence into Re z >= 8,
// then the asymptotic series with Bernoulli coefficients; reflection for
// Re z < 0.  Accuracy ~1e-14 at desk scale.
inline complex digamma(complex z) {
  if (!is_finite(z)) throw domain_error("digamma: non-finite argument");
  if (near_nonpos_int(z)) throw pole_error("digamma: pole at nonpositive integer");
  if (z.real() < 0.0) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    complex piz = ConstantsTable::pi * z;
    return digamma(1.0 - z) - ConstantsTable::pi * std::cos(piz) / std::sin(piz);
  }
  complex acc = 0.0;
  complex w = z;
  while (w.real() < 8.0) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  // psi(w) ~ log w - 1/(2w) - sum B_{2k} / (2k w^{2k})
  static constexpr double b[7] = {
      -1.0 / 12.0,  1.0 / 120.0,      -1.0 / 252.0, 1.0 / 240.0,
      -1.0 / 132.0, 691.0 / 32760.0,  -1.0 / 12.0};
  complex inv2 = 1.0 / (w * w);
  complex p = inv2;
  complex series = 0.0;
  for (int k = 0; k < 7; ++k) {
    series += b[k] * p;
    p *= inv2;
  }
  return acc + log_principal(w) - 0.5 / w + series;
}

}  // namespace lerchkit
