#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace alber {

// Rejected input: malformed data, violated preconditions, bad configuration.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature refinement exhausted. Carries the last estimate so callers can
// report partial diagnostics.
class QuadratureFailure : public NumericalError {
 public:
  QuadratureFailure(const std::string& what, double t, std::complex<double> last_estimate,
                    double last_error)
      : NumericalError(what), t_(t), estimate_(last_estimate), error_(last_error) {}

  double t() const noexcept { return t_; }
  std::complex<double> last_estimate() const noexcept { return estimate_; }
  double last_error() const noexcept { return error_; }

 private:
  double t_;
  std::complex<double> estimate_;
  double error_;
};

}  // namespace alber
