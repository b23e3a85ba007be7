#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace alber {

using cplx = std::complex<double>;

struct QuadratureParams {
  double eta = 1e-4;  // compl_tol
  double rel_tol = 1e-2;
  double abs_tol = 1e-6;
  int initial_panels = 64;
  int max_levels = 12;

  // Throws InputError.
  void validate() const;
};

struct TransformSample {
  double t = 0.0;
  cplx value{};
  double est_error = 0.0;
  int panels_used = 0;
};

// Real function vanishing outside [lo, hi]. Breakpoints mark places where the
// function is only piecewise smooth (kinks, node positions); they become panel
// edges.
struct SupportedFunction {
  std::function<double(double)> f;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> breakpoints;

  bool empty() const { return !(hi > lo) || !f; }
};

// (1/pi) * integral of u(s) / (z - s) ds over the support, z off the real
// axis. Composite Simpson on a coarse grid and a fine grid with three times the
// points; refined globally until rel_err <= rel_tol or abs_err <= abs_tol.
// Throws QuadratureFailure after max_levels refinements.
TransformSample cauchy_integral(const SupportedFunction& u, cplx z, const QuadratureParams& params);

// z = t - i*eta.
TransformSample regularized_transform(const SupportedFunction& u, double t,
                                      const QuadratureParams& params);

// The integration window for u. Integrand vanishes off the support, so this is
// the support itself; t, eta and tail_tol are unused for compactly supported u.
std::pair<double, double> truncation_window(std::pair<double, double> support, double t,
                                            double eta, double tail_tol);

// Plain composite Simpson with a fixed number of uniform subintervals (even).
cplx simpson_cauchy(const SupportedFunction& u, cplx z, int intervals);

// Panel edges used by cauchy_integral for a given z.
std::vector<double> panel_edges(const SupportedFunction& u, cplx z, const QuadratureParams& params);

}  // namespace alber
