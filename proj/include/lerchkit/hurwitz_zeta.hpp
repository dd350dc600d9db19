#pragma once

#include <cmath>
#include <complex>

#include "lerchkit/complex_ops.hpp"
#include "lerchkit/errors.hpp"
#include "lerchkit/options.hpp"

namespace lerchkit {

namespace detail {

// Bernoulli numbers B_2, B_4, ..., B_30.
inline constexpr double bernoulli_2k[15] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};

// Bernoulli number B_j for j <= 31 (odd j > 1 vanish).
inline double bernoulli(int j) {
  if (j == 0) return 1.0;
  if (j == 1) return -0.5;
  if (j % 2 == 1) return 0.0;
  return bernoulli_2k[j / 2 - 1];
}

// zeta(-m, a) = -B_{m+1}(a)/(m+1) with the Bernoulli polynomial expanded by
// binomials; avoids the N^{m+1}-scale cancellation of Euler-Maclaurin.
inline complex hurwitz_zeta_neg_int(int m, complex a) {
  const int M = m + 1;
  double binom = 1.0;  // C(M, j), exact integers throughout for M <= 31
  complex acc = 0.0;
  for (int j = 0; j <= M; ++j) {
    acc = acc * a + binom * bernoulli(j);
    binom = binom * double(M - j) / double(j + 1);
  }
  return -acc / double(M);
}

}  // namespace detail

// Hurwitz zeta zeta(s, a) = sum_{n>=0} (a+n)^{-s}, continued to all s != 1 by
// Euler-Maclaurin:
//
//   zeta(s,a) = sum_{n<N} (a+n)^{-s} + u^{1-s}/(s-1) + u^{-s}/2
//             + sum_{j>=1} B_{2j}/(2j)! (s)_{2j-1} u^{-s-2j+1},   u = a + N.
//
// Nonpositive integer s (within domain_eps, down to -30) short-circuits to
// the exact closed form -B_{m+1}(a)/(m+1).  Preconditions: s != 1 and a not
// a nonpositive integer, both within domain_eps; throws pole_error otherwise.
inline complex hurwitz_zeta(complex s, complex a, const EvalOptions& opts = {}) {
  opts.validate();
  if (!is_finite(s) || !is_finite(a)) throw domain_error("hurwitz_zeta: non-finite argument");
  if (std::abs(s - complex(1.0)) <= domain_eps) throw pole_error("hurwitz_zeta: pole at s = 1");
  if (near_nonpos_int(a)) throw pole_error("hurwitz_zeta: a at a nonpositive integer");

  long long si;
  if (near_int(s, si) && si <= 0 && si >= -30)
    return detail::hurwitz_zeta_neg_int(static_cast<int>(-si), a);

  double smag = std::abs(s);
  int n0 = static_cast<int>(std::ceil(
      std::max({12.0, 0.35 * smag + 8.0, 10.0 - a.real()})));

  complex best{};
  double best_err = HUGE_VAL;
  for (int attempt = 0; attempt < 4; ++attempt, n0 *= 2) {
    complex prefix = 0.0;
    for (int n = 0; n < n0; ++n) prefix += pow_principal(a + double(n), -s);

    complex u = a + double(n0);
    complex u_pow_ms = pow_principal(u, -s);  // u^{-s}
    complex tail = u * u_pow_ms / (s - 1.0) + 0.5 * u_pow_ms;

    // Correction terms T_j = B_{2j}/(2j)! (s)_{2j-1} u^{-s-2j+1} via the
    // ratio T_{j+1}/T_j * (B-ratio) = (s+2j-1)(s+2j)/u^2.
    complex inv_u2 = 1.0 / (u * u);
    complex core = s * u_pow_ms / u;  // (s)_1 u^{-s-1}
    double fact = 2.0;                // (2j)!
    complex corr = 0.0;
    double last_mag = HUGE_VAL;
    bool ok = false;
    for (int j = 1; j <= 15; ++j) {
      complex term = detail::bernoulli_2k[j - 1] / fact * core;
      corr += term;
      double mag = std::abs(term);
      if (mag <= opts.tolerance_for(std::abs(prefix + tail + corr)) * 0.1) {
        ok = true;
        best = prefix + tail + corr;
        best_err = mag;
        break;
      }
      if (mag > last_mag) break;  // divergent regime: u too small for this s
      last_mag = mag;
      core *= (s + double(2 * j - 1)) * (s + double(2 * j)) * inv_u2;
      if (std::abs(core) == 0.0) {  // terminating case: s a nonpositive integer
        ok = true;
        best = prefix + tail + corr;
        best_err = 0.0;
        break;
      }
      fact *= (2 * j + 1) * (2 * j + 2);
    }
    if (ok) return best;

    complex cand = prefix + tail + corr;
    if (last_mag < best_err) {
      best_err = last_mag;
      best = cand;
    }
  }
  throw no_convergence_error("hurwitz_zeta: Euler-Maclaurin did not settle", best, best_err);
}

// Riemann zeta as the a = 1 special case.
inline complex riemann_zeta(complex s, const EvalOptions& opts = {}) {
  return hurwitz_zeta(s, complex(1.0), opts);
}

}  // namespace lerchkit
