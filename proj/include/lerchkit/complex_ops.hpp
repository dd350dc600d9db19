#pragma once

#include <cmath>
#include <complex>

#include "lerchkit/constants.hpp"
#include "lerchkit/errors.hpp"

namespace lerchkit {

using complex = std::complex<double>;

// Classification epsilon: inputs within this distance of a special point
// (z = 1, integer s, a pole of v) are treated as being at that point.
inline constexpr double domain_eps = 1e-12;

inline bool is_finite(complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Principal argument normalized to (-pi, pi]: IEEE signed zeros would
// otherwise map points on the negative real axis to -pi.
inline double arg_principal(complex z) {
  double a = std::arg(z);
  if (a == -ConstantsTable::pi) a = ConstantsTable::pi;
  return a;
}

// Principal logarithm with Im in (-pi, pi].
inline complex log_principal(complex z) {
  complex w = std::log(z);
  if (w.imag() == -ConstantsTable::pi) w.imag(ConstantsTable::pi);
  return w;
}

// Principal power z^w = exp(w log z).  All multivalued powers in the library
// go through here so branch choices stay consistent; in particular
// (-1)^(p/q) = exp(i pi p/q).
inline complex pow_principal(complex z, complex w) {
  if (z == complex(0.0)) {
    if (w == complex(0.0)) return complex(1.0);
    if (w.real() > 0.0) return complex(0.0);
    throw domain_error("pow_principal: 0 raised to power with Re <= 0");
  }
  return std::exp(w * log_principal(z));
}

// exp(i theta) on the unit circle.
inline complex expi(double theta) { return std::polar(1.0, theta); }

// (-1)^e = exp(i pi e) for real exponents, exact on the unit circle.
inline complex minus_one_pow(double e) { return std::polar(1.0, ConstantsTable::pi * e); }

// True if w lies within domain_eps of a nonpositive integer {0, -1, -2, ...}.
inline bool near_nonpos_int(complex w) {
  if (std::abs(w.imag()) > domain_eps) return false;
  double r = std::round(w.real());
  return r <= 0.5 && std::abs(w.real() - r) <= domain_eps;
}

// True if w lies within domain_eps of the given real value.
inline bool near_real(complex w, double x) {
  return std::abs(w.imag()) <= domain_eps && std::abs(w.real() - x) <= domain_eps;
}

// If s is within domain_eps of an integer, returns true and stores it.
inline bool near_int(complex s, long long& out) {
  if (std::abs(s.imag()) > domain_eps) return false;
  double r = std::round(s.real());
  if (std::abs(s.real() - r) > domain_eps) return false;
  out = static_cast<long long>(r);
  return true;
}

}  // namespace lerchkit
