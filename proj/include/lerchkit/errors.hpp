#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lerchkit {

// Base class for all numerical failures raised by this library.
class math_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation requested at a pole of the target function.
class pole_error : public math_error {
 public:
  using math_error::math_error;
};

// Arguments outside the supported domain (|z| > 1, non-finite input, ...).
class domain_error : public math_error {
 public:
  using math_error::math_error;
};

// The defining series/integral diverges at the requested point.
class divergence_error : public math_error {
 public:
  using math_error::math_error;
};

// An iterative scheme ran out of budget before meeting the tolerance.
// Carries the best estimate so callers can decide whether to accept it.
class no_convergence_error : public math_error {
 public:
  no_convergence_error(const std::string& what, std::complex<double> best_estimate,
                       double err_estimate)
      : math_error(what), best_estimate_(best_estimate), err_estimate_(err_estimate) {}

  std::complex<double> best_estimate() const noexcept { return best_estimate_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  std::complex<double> best_estimate_;
  double err_estimate_;
};

}  // namespace lerchkit
