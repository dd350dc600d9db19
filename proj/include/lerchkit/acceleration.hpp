#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lerchkit/complex_ops.hpp"
#include "lerchkit/errors.hpp"
#include "lerchkit/options.hpp"

namespace lerchkit {

struct SeriesResult {
  complex value{};
  double err_estimate = 0.0;
  int terms_used = 0;
  bool converged = false;
};

namespace detail {

// Levin sequence transform, triangular numerator/denominator recursion
// (Numerical Recipes 3rd ed., 5.3.2), extended to complex sums.  With
// remainder estimates omega_n = (beta + n) a_n this is the u-transform.
class LevinSum {
 public:
  explicit LevinSum(int nmax) : numer_(nmax), denom_(nmax) {}

  complex next(complex sum, complex omega, double beta = 1.0) {
    int n = n_;
    double term = 1.0 / (beta + n);
    denom_[n] = term / omega;
    numer_[n] = sum * denom_[n];
    if (n > 0) {
      double ratio = (beta + n - 1) * term;
      for (int j = 1; j <= n; ++j) {
        double fact = (n - j + beta) * term;
        numer_[n - j] = numer_[n - j + 1] - fact * numer_[n - j];
        denom_[n - j] = denom_[n - j + 1] - fact * denom_[n - j];
        term *= ratio;
      }
    }
    ++n_;
    return numer_[0] / denom_[0];
  }

  int count() const { return n_; }

 private:
  std::vector<complex> numer_, denom_;
  int n_ = 0;
};

}  // namespace detail

// Accelerated summation of the series whose terms the generator yields on
// successive calls (term 0 first), via the Levin u-transform.  Tuned for
// alternating and unit-circle series; also sums Abel-summable divergent
// alternating series to their anti-limit, which is how the library continues
// unit-circle evaluations with nonpositive Re s.
//
// The error estimate is the spread of the last three transform orders.
// Stagnation (no improvement over a trailing window) or hitting the term cap
// raises no_convergence_error carrying the best estimate seen.
template <class G>
SeriesResult accelerate_alternating(G&& next_term, const EvalOptions& opts = {}) {
  opts.validate();

  const double beta = 1.0;
  const int cap = std::min(opts.max_terms, 4000);
  detail::LevinSum levin(cap);

  complex psum = 0.0;
  complex est = 0.0, prev1 = 0.0, prev2 = 0.0;
  complex best = 0.0;
  double best_err = HUGE_VAL;
  int best_at = 0;
  int zero_run = 0;

  for (int n = 0; n < cap; ++n) {
    complex a = next_term();
    if (!is_finite(a)) throw domain_error("accelerate_alternating: non-finite term");
    psum += a;

    // A terminating series needs no transform; return the exact sum.
    if (std::abs(a) == 0.0) {
      if (++zero_run >= 3) return {psum, 0.0, n + 1, true};
      continue;
    }
    zero_run = 0;

    complex omega = (beta + levin.count()) * a;
    complex cand = levin.next(psum, omega, beta);
    if (!is_finite(cand)) continue;
    prev2 = prev1;
    prev1 = est;
    est = cand;

    if (n >= 4) {
      double err = std::abs(est - prev1) + std::abs(prev1 - prev2);
      if (err < best_err) {
        best_err = err;
        best = est;
        best_at = n;
      }
      if (err <= opts.tolerance_for(std::abs(est))) {
        return {est, err, n + 1, true};
      }
      // Rounding noise in the triangle eventually stops progress; bail out
      // rather than misreport the noise floor as convergence.
      if (n - best_at > 16 && n >= 24) {
        throw no_convergence_error("accelerate_alternating: stagnation", best, best_err);
      }
    }
  }

  throw no_convergence_error("accelerate_alternating: term cap reached", best, best_err);
}

}  // namespace lerchkit
