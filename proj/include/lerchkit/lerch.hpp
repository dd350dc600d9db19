#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "lerchkit/acceleration.hpp"
#include "lerchkit/complex_ops.hpp"
#include "lerchkit/contour_derivative.hpp"
#include "lerchkit/errors.hpp"
#include "lerchkit/gamma.hpp"
#include "lerchkit/hurwitz_zeta.hpp"
#include "lerchkit/options.hpp"
#include "lerchkit/quadrature.hpp"

namespace lerchkit {

// Evaluation strategy actually used for a Lerch transcendent value.
enum class LerchStrategy {
  DirectSeries,           // partial sums with a geometric tail bound
  AcceleratedSeries,      // Levin u-transform (unit circle / slow decay)
  ClosedFormNonPosIntS,   // rational closed form for s in {0, -1, ..., -12}
  HermiteIntegral,        // Hermite-type integral representation
  VShiftRecurrence,       // prefix sum + shifted evaluation (Re v < 1)
  HurwitzEulerMaclaurin,  // z a root of unity (z = 1 included): Hurwitz zeta engine
  CircleReflection        // |z| = 1, Re s < 1/4: Lerch functional equation
};

inline const char* to_string(LerchStrategy s) {
  switch (s) {
    case LerchStrategy::DirectSeries: return "DirectSeries";
    case LerchStrategy::AcceleratedSeries: return "AcceleratedSeries";
    case LerchStrategy::ClosedFormNonPosIntS: return "ClosedFormNonPosIntS";
    case LerchStrategy::HermiteIntegral: return "HermiteIntegral";
    case LerchStrategy::VShiftRecurrence: return "VShiftRecurrence";
    case LerchStrategy::HurwitzEulerMaclaurin: return "HurwitzEulerMaclaurin";
    case LerchStrategy::CircleReflection: return "CircleReflection";
  }
  return "?";
}

// Coarse domain classification of an evaluation point.
enum class LerchDomain { InsideDisk, UnitCircle, AtOne, Outside };

struct LerchPoint {
  complex z, s, v;
  LerchDomain domain;
};

inline LerchPoint classify(complex z, complex s, complex v) {
  LerchDomain d;
  double az = std::abs(z);
  if (std::abs(z - complex(1.0)) <= domain_eps)
    d = LerchDomain::AtOne;
  else if (az > 1.0 + domain_eps)
    d = LerchDomain::Outside;
  else if (az >= 1.0 - domain_eps)
    d = LerchDomain::UnitCircle;
  else
    d = LerchDomain::InsideDisk;
  return {z, s, v, d};
}

struct LerchResult {
  complex value{};
  double err_estimate = 0.0;
  LerchStrategy strategy = LerchStrategy::DirectSeries;
  int terms_used = 0;
};

namespace detail {

// --- Direct series -------------------------------------------------------
//
// sum_n z^n (v+n)^{-s} with Kahan compensation.  Stops when a geometric
// bound on the tail drops below half the tolerance; the bound uses
// |t_{n+1}/t_n| <= |z| (1 + 1/|v+n|)^max(0,-Re s) exp(|Im s| |Im v|/|v+n|^2).
// Returns converged = false instead of throwing when max_terms is hit, so
// the dispatcher can fall through to another strategy.
inline SeriesResult phi_direct_series(complex z, complex s, complex v,
                                      const EvalOptions& opts) {
  const double az = std::abs(z);
  const double p = std::max(0.0, -s.real());
  const double tau = std::abs(s.imag());

  complex sum = 0.0, comp = 0.0;
  double abs_sum = 0.0;
  complex zn = 1.0;
  SeriesResult res;
  for (int n = 0; n < opts.max_terms; ++n) {
    complex term = zn * pow_principal(v + double(n), -s);
    complex y = term - comp;
    complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    abs_sum += std::abs(term);
    zn *= z;

    if (n >= 2) {
      double r = std::abs(v + double(n));
      double rho = az * std::pow(1.0 + 1.0 / r, p) * std::exp(tau * std::abs(v.imag()) / (r * r));
      if (rho < 0.995) {
        double tail = std::abs(term) * rho / (1.0 - rho);
        double round_err = 2e-16 * abs_sum;
        if (tail <= 0.5 * opts.tolerance_for(std::abs(sum))) {
          res.value = sum;
          res.err_estimate = tail + round_err;
          res.terms_used = n + 1;
          res.converged = true;
          return res;
        }
      }
    }
  }
  res.value = sum;
  res.err_estimate = HUGE_VAL;
  res.terms_used = opts.max_terms;
  res.converged = false;
  return res;
}

// --- Levin-accelerated series -------------------------------------------
inline SeriesResult phi_accelerated(complex z, complex s, complex v,
                                    const EvalOptions& opts) {
  complex zn = 1.0;
  int n = 0;
  auto gen = [&]() {
    complex term = zn * pow_principal(v + double(n), -s);
    zn *= z;
    ++n;
    return term;
  };
  return accelerate_alternating(gen, opts);
}

// Block length that turns a slowly rotating unit-circle series into a
// near-alternating one: L consecutive terms advance the phase by about pi.
inline int phase_block_length(complex z) {
  double th = std::abs(arg_principal(z));
  if (th < 1e-8) return 64;
  long long L = std::lround(ConstantsTable::pi / th);
  return static_cast<int>(std::clamp(L, 1LL, 64LL));
}

// Levin transform over blocks of L consecutive terms.  The transform needs a
// sign pattern it can model; for arg z small the per-term rotation is too
// slow, while the block sums alternate cleanly (adjacent blocks differ by
// e^{i L arg z} ~ -1 times a slowly varying factor).
inline SeriesResult phi_accelerated_blocked(complex z, complex s, complex v, int L,
                                            const EvalOptions& opts) {
  complex zn = 1.0;
  long long n = 0;
  auto gen = [&]() {
    complex block = 0.0;
    for (int i = 0; i < L; ++i) {
      block += zn * pow_principal(v + double(n), -s);
      zn *= z;
      ++n;
    }
    return block;
  };
  SeriesResult r = accelerate_alternating(gen, opts);
  r.terms_used = static_cast<int>(n);
  return r;
}

// --- Closed form for nonpositive integer s -------------------------------
//
// Phi(z, -m, v) = sum_{k=0}^{m} c_k(v) / (1-z)^{k+1} where the coefficient
// polynomials follow from d/dv: c_k' = (v - k - 1) c_k + k c_{k-1} starting
// from {1}.  The integer coefficient tables (k: power of 1/(1-z), j: power
// of v) are built once; entries stay below 2^53 for m <= 12.
inline constexpr int closed_form_max_m = 12;

inline const std::array<std::array<std::array<double, 14>, 14>, 13>& closed_form_tables() {
  static const auto tables = [] {
    std::array<std::array<std::array<double, 14>, 14>, 13> t{};
    t[0][0][0] = 1.0;
    for (int m = 0; m < closed_form_max_m; ++m) {
      const auto& cur = t[m];
      auto& nxt = t[m + 1];
      for (int k = 0; k <= m + 1; ++k) {
        for (int j = 0; j <= m + 1; ++j) {
          double acc = 0.0;
          if (j >= 1) acc += cur[k][j - 1];              // v * c_k
          acc -= double(k + 1) * cur[k][j];              // -(k+1) c_k
          if (k >= 1) acc += double(k) * cur[k - 1][j];  // k c_{k-1}
          nxt[k][j] = acc;
        }
      }
    }
    return t;
  }();
  return tables;
}

inline LerchResult phi_nonpos_int_s(complex z, int m, complex v) {
  const auto& table = closed_form_tables()[m];
  complex w = 1.0 / (1.0 - z);
  complex value = 0.0;
  complex wk = w;
  for (int k = 0; k <= m; ++k) {
    complex ck = 0.0;
    for (int j = m - k; j >= 0; --j) ck = ck * v + table[k][j];  // Horner in v
    value += ck * wk;
    wk *= w;
  }
  if (!is_finite(value))
    throw divergence_error("lerch_phi: closed form overflows this close to z = 1");
  return {value, 4e-16 * std::abs(value) * double(m + 1), LerchStrategy::ClosedFormNonPosIntS,
          m + 1};
}

// --- Hermite integral -----------------------------------------------------
//
//   Phi(z,s,v) = v^{-s}/2 + M + B,
//   M = int_0^inf z^x (v+x)^{-s} dx, rotated onto the ray arg x = -arg(-log z)
//       where the exponential part decays without oscillation,
//   B = 2 int_0^inf sin(x log z - s atan(x/v))-type kernel; evaluated in the
//       equivalent complex form i [f(ix) - f(-ix)] / (e^{2 pi x} - 1).
//
// Valid for 0 < |z| < 1 and Re v > 0 (Hermite's formula for the Lerch
// transcendent; see Erdelyi et al., Higher Transcendental Functions I,
// 1.11(1) for the z = 1 case).
inline LerchResult phi_hermite(complex z, complex s, complex v, const EvalOptions& opts) {
  complex lz = log_principal(z);
  complex mu = -lz;  // Re mu > 0 for |z| < 1
  double mu_abs = std::abs(mu);
  double phi_rot = arg_principal(mu);
  complex rot = expi(-phi_rot);

  auto middle = [&](double t) -> complex {
    double q = -mu_abs * t;
    if (q < -745.0) return 0.0;
    return std::exp(q) * pow_principal(v + t * rot, -s);
  };
  QuadResult m_int = quad_semi_infinite(middle, opts);

  auto f = [&](complex x) { return std::exp(x * lz) * pow_principal(v + x, -s); };
  auto binet = [&](double x) -> complex {
    double e = 2.0 * ConstantsTable::pi * x;
    if (e > 700.0) return 0.0;
    complex ix(0.0, x);
    complex num = complex(0.0, 1.0) * (f(ix) - f(-ix));
    return num / std::expm1(e);
  };
  QuadResult b_int = quad_semi_infinite(binet, opts);

  complex value = 0.5 * pow_principal(v, -s) + rot * m_int.value + b_int.value;
  double err = m_int.err_estimate + b_int.err_estimate + 4e-16 * std::abs(value);
  return {value, err, LerchStrategy::HermiteIntegral, m_int.evaluations + b_int.evaluations};
}

inline bool s_is_closed_form(complex s, int& m_out) {
  long long si;
  if (near_int(s, si) && si <= 0 && si >= -closed_form_max_m) {
    m_out = static_cast<int>(-si);
    return true;
  }
  return false;
}

}  // namespace detail

inline LerchResult phi(complex z, complex s, complex v, const EvalOptions& opts);

namespace detail {

// --- Lerch functional equation on the unit circle --------------------------
//
// For real 0 < x < 1 and 0 < a <= 1, with s = 1 - S (Apostol, Pacific J.
// Math. 1 (1951); Erdelyi et al., Higher Transcendental Functions I, 1.11):
//
//   Phi(e^{2 pi i x}, S, a) = (2 pi)^{-s} Gamma(s)
//       * ( e^{ i pi s/2 - 2 pi i a x    } Phi(e^{-2 pi i a}, s, x)
//         + e^{-i pi s/2 + 2 pi i a (1-x)} Phi(e^{ 2 pi i a}, s, 1 - x) ).
//
// Both right-hand series carry Re(s) = 1 - Re(S) > 3/4, where the circle
// series converge; at a = 1 they collapse to Hurwitz zetas.  This is the
// analytic continuation used for |z| = 1 with Re(S) < 1/4 and real v, where
// the power series in z needs an anti-limit.  The general v is first split
// as v = a + K, K integer, via the shift recurrence.
inline LerchResult phi_circle_reflection(complex z, complex S, double v,
                                         const EvalOptions& opts) {
  const double PI = ConstantsTable::pi;
  double x = arg_principal(z) / (2.0 * PI);
  if (x <= 0.0) x += 1.0;  // z = 1 is excluded by the caller, so 0 < x < 1

  double K = std::ceil(v) - 1.0;  // v = a + K with a in (0, 1]
  double a = v - K;
  complex s = complex(1.0) - S;

  complex t1, t2;
  double e1, e2;
  int terms = 0;
  if (a >= 1.0 - 1e-12) {
    t1 = hurwitz_zeta(s, complex(x), opts);
    t2 = hurwitz_zeta(s, complex(1.0 - x), opts);
    e1 = opts.tolerance_for(std::abs(t1));
    e2 = opts.tolerance_for(std::abs(t2));
  } else {
    LerchResult r1 = phi(std::polar(1.0, -2.0 * PI * a), s, complex(x), opts);
    LerchResult r2 = phi(std::polar(1.0, 2.0 * PI * a), s, complex(1.0 - x), opts);
    t1 = r1.value;
    t2 = r2.value;
    e1 = r1.err_estimate;
    e2 = r2.err_estimate;
    terms = r1.terms_used + r2.terms_used;
  }

  const complex I(0.0, 1.0);
  complex c = pow_principal(2.0 * PI, -s) * gamma(s);
  complex p1 = std::exp(I * PI * s / 2.0 - 2.0 * PI * I * a * x);
  complex p2 = std::exp(-I * PI * s / 2.0 + 2.0 * PI * I * a * (1.0 - x));
  complex core = c * (p1 * t1 + p2 * t2);
  double core_err = std::abs(c) * (std::abs(p1) * (e1 + 4e-16 * std::abs(t1)) +
                                   std::abs(p2) * (e2 + 4e-16 * std::abs(t2))) +
                    4e-16 * std::abs(core);

  // Undo the parameter split: Phi(z,S,v) = z^{-K} (Phi(z,S,a) - prefix) for
  // K >= 0, or prefix + z^{-K} Phi(z,S,a) for K < 0.  |z| = 1, so the
  // rotation does not amplify the error.
  int Ki = static_cast<int>(K);
  complex value;
  double err;
  if (Ki >= 0) {
    complex acc = 0.0, zj = 1.0;
    double amag = 0.0;
    for (int j = 0; j < Ki; ++j) {
      complex term = zj * pow_principal(complex(a) + double(j), -S);
      acc += term;
      amag += std::abs(term);
      zj *= z;
    }
    value = (core - acc) / zj;
    err = core_err + 2e-16 * (amag + std::abs(value)) * double(Ki + 2);
  } else {
    complex acc = 0.0, zj = 1.0;
    double amag = 0.0;
    for (int j = 0; j < -Ki; ++j) {
      complex term = zj * pow_principal(complex(v) + double(j), -S);
      acc += term;
      amag += std::abs(term);
      zj *= z;
    }
    value = acc + zj * core;
    err = core_err + 2e-16 * (amag + std::abs(value)) * double(-Ki + 2);
  }
  return {value, err, LerchStrategy::CircleReflection, terms + std::abs(Ki)};
}

// Smallest q <= qmax with z^q = 1, for z already known to sit on the unit
// circle; writes the numerator p reduced to [0, q) and returns q, or 0 when
// no such order exists.  gcd(p, q) = 1 follows from minimality.  The angular
// snap window (1e-13 per unit q) is wide next to the rounding of any honest
// exp(2 pi i p/q) input and narrow enough that a chance hit perturbs the
// value below the reported error.
inline int root_of_unity_order(complex z, int qmax, long long& p_out) {
  const double theta = arg_principal(z) / (2.0 * ConstantsTable::pi);
  for (int q = 1; q <= qmax; ++q) {
    const double pq = theta * double(q);
    const double p = std::round(pq);
    if (std::abs(pq - p) <= 1e-13 * double(q)) {
      long long pr = static_cast<long long>(p) % q;
      if (pr < 0) pr += q;
      p_out = pr;
      return q;
    }
  }
  return 0;
}

// Phi(z, s, v) for z = e^{2 pi i p/q} != 1 by splitting the defining series
// over residue classes mod q:
//
//   Phi(z, s, v) = q^{-s} sum_{r=0}^{q-1} z^r zeta(s, (v+r)/q).
//
// Each Hurwitz zeta is continued by Euler-Maclaurin, so the identity holds
// for all s once the individual poles at s = 1 cancel; the cancellation is
// catastrophic numerically near s = 1, so callers gate on |s - 1|.  Requires
// Re v > 0.  The reported error carries the zeta magnitudes, which makes any
// cancellation between residue classes visible in the estimate.
inline LerchResult phi_root_of_unity(complex s, complex v, long long p, int q,
                                     const EvalOptions& opts) {
  complex acc = 0.0;
  double amag = 0.0;
  double err_terms = 0.0;
  for (int r = 0; r < q; ++r) {
    const complex zr =
        std::polar(1.0, 2.0 * ConstantsTable::pi * double((p * r) % q) / double(q));
    const complex zeta = hurwitz_zeta(s, (v + double(r)) / double(q), opts);
    acc += zr * zeta;
    amag += std::abs(zeta);
    err_terms += opts.tolerance_for(std::abs(zeta));
  }
  const complex scale = pow_principal(complex(double(q)), -s);
  const complex value = scale * acc;
  const double err = std::abs(scale) * (err_terms + 4e-16 * amag) + 4e-16 * std::abs(value);
  return {value, err, LerchStrategy::HurwitzEulerMaclaurin, q};
}

}  // namespace detail

// Lerch transcendent Phi(z, s, v) = sum_{n>=0} z^n (v+n)^{-s} on the closed
// unit disk, continued beyond the region of convergence of the series:
// unit-circle points with any s are summed to the Abel anti-limit, z = 1
// with Re s > 1 delegates to the Hurwitz engine, and nonpositive integer s
// uses the exact rational closed form.
//
// Preconditions (domain_error / pole_error / divergence_error otherwise):
// finite arguments, |z| <= 1 + eps, v not within eps of {0, -1, -2, ...},
// and (z, s) != (1, s with Re s <= 1).
inline LerchResult phi(complex z, complex s, complex v, const EvalOptions& opts = {}) {
  opts.validate();
  if (!is_finite(z) || !is_finite(s) || !is_finite(v))
    throw domain_error("lerch_phi: non-finite argument");
  if (near_nonpos_int(v)) throw pole_error("lerch_phi: v at a nonpositive integer");

  const double az = std::abs(z);
  if (az > 1.0 + domain_eps)
    throw domain_error("lerch_phi: |z| > 1 is outside the supported domain");

  if (std::abs(z - complex(1.0)) <= domain_eps) {
    if (s.real() > 1.0 + domain_eps) {
      complex zeta = hurwitz_zeta(s, v, opts);
      return {zeta, opts.tolerance_for(std::abs(zeta)), LerchStrategy::HurwitzEulerMaclaurin, 0};
    }
    throw divergence_error("lerch_phi: z = 1 requires Re s > 1");
  }

  // Exact rational closed form, any z in the disk (z = 1 excluded above).
  int m = 0;
  if (detail::s_is_closed_form(s, m)) {
    return detail::phi_nonpos_int_s(z, m, v);
  }

  // Unit circle with Re s below the convergent range and real v: the Lerch
  // functional equation maps the evaluation onto circle series with
  // Re s > 3/4.  (Gamma(1 - s) caps the reach at Re s > -169.)
  if (az >= 1.0 - domain_eps && s.real() < 0.25 && 1.0 - s.real() <= 170.0 &&
      std::abs(v.imag()) <= 1e-13 * std::max(1.0, std::abs(v.real()))) {
    return detail::phi_circle_reflection(z, s, v.real(), opts);
  }

  // z^q = 1 for the circle points the functional equation does not take
  // (complex v, or s between the convergent range and the reflection
  // window): residue-class split over Hurwitz zetas.  Gated away from the
  // s = 1 pole cluster (the split zetas cancel catastrophically there), and
  // kept off Re s < 0 when reflection applies, where Euler-Maclaurin's
  // growing prefix terms cost more digits than the functional equation.
  if (az >= 1.0 - domain_eps && v.real() > 0.0 && std::abs(s - complex(1.0)) >= 1e-3 &&
      std::abs(s) <= 80.0 && s.real() > -35.0) {
    long long p = 0;
    int q = detail::root_of_unity_order(z, 64, p);
    if (q >= 2) return detail::phi_root_of_unity(s, v, p, q, opts);
  }

  // Shift v into Re v >= 1: Phi(z,s,v) = sum_{j<J} z^j (v+j)^{-s} + z^J Phi(z,s,v+J).
  complex prefix = 0.0;
  complex zj = 1.0;
  int shift = 0;
  while ((v + double(shift)).real() < 1.0) {
    prefix += zj * pow_principal(v + double(shift), -s);
    zj *= z;
    ++shift;
    if (shift > 1000000) throw domain_error("lerch_phi: Re v too negative");
  }
  complex vs = v + double(shift);

  LerchResult inner;
  if (az <= 0.98) {
    SeriesResult direct = detail::phi_direct_series(z, s, vs, opts);
    if (direct.converged) {
      inner = {direct.value, direct.err_estimate, LerchStrategy::DirectSeries,
               direct.terms_used};
    } else {
      try {
        SeriesResult acc = detail::phi_accelerated(z, s, vs, opts);
        inner = {acc.value, acc.err_estimate, LerchStrategy::AcceleratedSeries, acc.terms_used};
      } catch (const no_convergence_error&) {
        inner = detail::phi_hermite(z, s, vs, opts);
      }
    }
  } else {
    // Root of unity: the residue-class split is exact, cheap, and the only
    // machine-precision route when the phase rotates slowly (high order q),
    // where the Levin transform stalls.  Gated away from the s = 1 pole
    // cluster and from |s| large enough to strain Euler-Maclaurin.
    long long p = 0;
    int q = 0;
    if (az >= 1.0 - domain_eps && std::abs(s - complex(1.0)) >= 1e-3 && std::abs(s) <= 80.0 &&
        s.real() > -35.0 && (q = detail::root_of_unity_order(z, 64, p)) >= 2) {
      inner = detail::phi_root_of_unity(s, vs, p, q, opts);
    } else try {
      SeriesResult acc = detail::phi_accelerated(z, s, vs, opts);
      inner = {acc.value, acc.err_estimate, LerchStrategy::AcceleratedSeries, acc.terms_used};
    } catch (const no_convergence_error& e) {
      if (az < 1.0 - domain_eps) {
        inner = detail::phi_hermite(z, s, vs, opts);
      } else {
        // On the unit circle there is no integral fallback.  A slow phase
        // (arg z small) starves the transform of sign changes; retry on
        // near-alternating blocks.  Failing that, the transform often
        // plateaus near machine precision without meeting a tolerance
        // tighter than its rounding floor; accept the plateau when it is at
        // that floor, otherwise the failure is real.
        complex best = e.best_estimate();
        double err = e.err_estimate();
        int terms = opts.max_terms;
        const int L = detail::phase_block_length(z);
        if (L >= 2) {
          try {
            SeriesResult acc = detail::phi_accelerated_blocked(z, s, vs, L, opts);
            best = acc.value;
            err = acc.err_estimate;
            terms = acc.terms_used;
          } catch (const no_convergence_error& e2) {
            if (e2.err_estimate() < err && is_finite(e2.best_estimate())) {
              best = e2.best_estimate();
              err = e2.err_estimate();
            }
          }
        }
        double floor_ok =
            std::max(opts.tolerance_for(std::abs(best)), 1e-10 * std::max(1.0, std::abs(best)));
        if (is_finite(best) && err <= floor_ok) {
          inner = {best, err, LerchStrategy::AcceleratedSeries, terms};
        } else {
          throw;
        }
      }
    }
  }

  if (shift == 0) return inner;
  complex value = prefix + zj * inner.value;
  double err = std::abs(zj) * inner.err_estimate + 2e-16 * double(shift + 2) *
                                                       (std::abs(prefix) + std::abs(value));
  return {value, err, LerchStrategy::VShiftRecurrence, shift + inner.terms_used};
}

// Evaluate with a pinned strategy (strategy-agreement testing).  No
// fallbacks.  Per-strategy preconditions: DirectSeries and HermiteIntegral
// need |z| < 1 (Hermite additionally Re v > 0 and z != 0); AcceleratedSeries
// needs |z| <= 1 + eps; ClosedFormNonPosIntS needs s in {0,...,-12};
// HurwitzEulerMaclaurin needs z a root of unity of order <= 64 (z = 1 with
// Re s > 1, otherwise Re v > 0 and s away from 1); VShiftRecurrence applies
// one explicit shift and dispatches the rest.
inline LerchResult phi_with_strategy(complex z, complex s, complex v, LerchStrategy strategy,
                                     const EvalOptions& opts = {}) {
  opts.validate();
  if (!is_finite(z) || !is_finite(s) || !is_finite(v))
    throw domain_error("lerch_phi: non-finite argument");
  if (near_nonpos_int(v)) throw pole_error("lerch_phi: v at a nonpositive integer");

  switch (strategy) {
    case LerchStrategy::DirectSeries: {
      if (std::abs(z) >= 1.0) throw domain_error("DirectSeries requires |z| < 1");
      SeriesResult r = detail::phi_direct_series(z, s, v, opts);
      if (!r.converged)
        throw no_convergence_error("DirectSeries: term cap reached", r.value, r.err_estimate);
      return {r.value, r.err_estimate, LerchStrategy::DirectSeries, r.terms_used};
    }
    case LerchStrategy::AcceleratedSeries: {
      if (std::abs(z) > 1.0 + domain_eps)
        throw domain_error("AcceleratedSeries requires |z| <= 1");
      SeriesResult r = detail::phi_accelerated(z, s, v, opts);
      return {r.value, r.err_estimate, LerchStrategy::AcceleratedSeries, r.terms_used};
    }
    case LerchStrategy::ClosedFormNonPosIntS: {
      int m = 0;
      if (!detail::s_is_closed_form(s, m))
        throw domain_error("ClosedFormNonPosIntS requires s in {0, -1, ..., -12}");
      if (std::abs(z - complex(1.0)) <= domain_eps)
        throw domain_error("ClosedFormNonPosIntS requires z != 1");
      return detail::phi_nonpos_int_s(z, m, v);
    }
    case LerchStrategy::HermiteIntegral: {
      if (std::abs(z) >= 1.0 || z == complex(0.0))
        throw domain_error("HermiteIntegral requires 0 < |z| < 1");
      if (v.real() <= 0.0) throw domain_error("HermiteIntegral requires Re v > 0");
      return detail::phi_hermite(z, s, v, opts);
    }
    case LerchStrategy::VShiftRecurrence: {
      LerchResult inner = phi(z, s, v + 1.0, opts);
      complex value = pow_principal(v, -s) + z * inner.value;
      return {value, inner.err_estimate + 4e-16 * std::abs(value),
              LerchStrategy::VShiftRecurrence, inner.terms_used + 1};
    }
    case LerchStrategy::HurwitzEulerMaclaurin: {
      if (std::abs(z - complex(1.0)) <= domain_eps) {
        if (s.real() <= 1.0 + domain_eps)
          throw divergence_error("lerch_phi: z = 1 requires Re s > 1");
        complex zeta = hurwitz_zeta(s, v, opts);
        return {zeta, opts.tolerance_for(std::abs(zeta)), LerchStrategy::HurwitzEulerMaclaurin,
                0};
      }
      double az = std::abs(z);
      long long p = 0;
      int q = 0;
      if (az < 1.0 - domain_eps || az > 1.0 + domain_eps ||
          (q = detail::root_of_unity_order(z, 64, p)) < 2)
        throw domain_error("HurwitzEulerMaclaurin requires z^q = 1 for some q <= 64");
      if (std::abs(s - complex(1.0)) < 1e-3)
        throw domain_error("HurwitzEulerMaclaurin requires s away from 1 for z != 1");
      if (v.real() <= 0.0)
        throw domain_error("HurwitzEulerMaclaurin requires Re v > 0 for z != 1");
      return detail::phi_root_of_unity(s, v, p, q, opts);
    }
    case LerchStrategy::CircleReflection: {
      double az = std::abs(z);
      if (az < 1.0 - domain_eps || az > 1.0 + domain_eps)
        throw domain_error("CircleReflection requires |z| = 1");
      if (std::abs(z - complex(1.0)) <= domain_eps)
        throw domain_error("CircleReflection requires z != 1");
      if (s.real() >= 0.25 || 1.0 - s.real() > 170.0)
        throw domain_error("CircleReflection requires Re s in (-169, 1/4)");
      if (std::abs(v.imag()) > 1e-13 * std::max(1.0, std::abs(v.real())))
        throw domain_error("CircleReflection requires real v");
      return detail::phi_circle_reflection(z, s, v.real(), opts);
    }
  }
  throw domain_error("phi_with_strategy: unknown strategy");
}

// d^order/ds^order Phi(z, s, v) at s = s0, order in {1, 2}, via a Cauchy
// contour in the s-plane.  Phi is entire in s for z in the closed disk minus
// {1}; at z = 1 the contour radius is shrunk to keep Re s > 1 and away from
// the s = 1 pole.
inline LerchResult phi_sderiv(complex z, complex s0, complex v, int order,
                              const EvalOptions& opts = {}) {
  opts.validate();
  if (order < 1 || order > 2) throw domain_error("phi_sderiv: order must be 1 or 2");

  EvalOptions copts = opts;
  if (std::abs(z - complex(1.0)) <= domain_eps) {
    double margin = s0.real() - 1.0;
    if (margin <= 2.0 * domain_eps)
      throw divergence_error("phi_sderiv: z = 1 requires Re s0 > 1");
    copts.deriv_radius = std::min(opts.deriv_radius, 0.5 * margin);
  }

  EvalOptions inner = opts;
  inner.abs_tol = std::max(opts.abs_tol / 64.0, 3e-14);
  inner.rel_tol = std::max(opts.rel_tol / 64.0, 3e-14);

  // The strategy label is taken from the first contour node: the nodes are
  // what the derivative is computed from, and the center itself is never
  // evaluated (Phi can be harder exactly at s0, e.g. s0 = 1 on the circle).
  LerchStrategy strategy = LerchStrategy::AcceleratedSeries;
  bool labeled = false;
  DerivResult d = cauchy_derivative(
      [&](complex s) {
        LerchResult r = phi(z, s, v, inner);
        if (!labeled) {
          strategy = r.strategy;
          labeled = true;
        }
        return r.value;
      },
      s0, order, copts);
  return {d.value, d.err_estimate, strategy, d.evaluations};
}

}  // namespace lerchkit
