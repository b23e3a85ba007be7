#pragma once

#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "alber/singular_integral.hpp"
#include "alber/spectra.hpp"

namespace alber {

inline constexpr double kPenrosePoint = 1.0 / (4.0 * std::numbers::pi);

struct CurvePoint {
  double t = 0.0;  // +inf for the appended origin
  cplx z{};
  double err = 0.0;
};

struct GammaCurve {
  double X = 0.0;
  std::vector<CurvePoint> points;  // ordered by t, origin last
  bool closed = true;
  std::vector<double> crossings;  // t* where D_X P changes sign
  double max_error = 0.0;
  long evaluations = 0;
};

struct CurveScanPlan {
  std::vector<double> X_values = default_sweep();
  // t range = support of D_X P widened by this fraction of its width per side.
  double dilation = 0.5;
  int base_points = 256;
  int refine_passes = 6;
  // Chord length limit relative to max |z| on the curve.
  double chord_tol = 0.01;
  std::size_t max_points = 6000;
  QuadratureParams quad{};
  // When set, full curves are built only where the fast check cannot exclude
  // containment and at reference_X (for the distance).
  bool reference_only = false;
  double reference_X = 5e-4;
  unsigned workers = 0;  // 0 = default_workers()

  // 16 log-spaced values on [1e-4, 1] plus 5e-4, sorted.
  static std::vector<double> default_sweep();
  void validate() const;
};

struct FastCheck {
  double X = 0.0;
  std::vector<double> crossings;
  double max_crossing = -std::numeric_limits<double>::infinity();
  double max_crossing_error = 0.0;
  bool excluded = true;  // curve cannot contain 1/4pi
};

struct XDiagnostics {
  double X = 0.0;
  double max_crossing = -std::numeric_limits<double>::infinity();
  double diameter = 0.0;
  double distance = kPenrosePoint;
  double max_error = 0.0;
  bool fast_excluded = true;
  bool curve_built = false;
  bool contains = false;
};

struct StabilityReport {
  bool stable = true;
  std::vector<double> unstable_wavenumbers;
  double distance = kPenrosePoint;
  double pti = 0.0;
  std::vector<XDiagnostics> per_x;
  bool complete = true;
  std::string failure;
};

SupportedFunction divided_difference_function(const RescaledSpectrum& P, double X);

// Sign changes of D_X P, bisected to 1e-10. Support edges are not included.
std::vector<double> real_axis_crossings(const RescaledSpectrum& P, double X,
                                        const CurveScanPlan& plan = {});

GammaCurve gamma_curve(const RescaledSpectrum& P, double X, const CurveScanPlan& plan = {});

FastCheck fast_stability_check(const RescaledSpectrum& P, double X,
                               const CurveScanPlan& plan = {});

// Winding-number containment; points on the polyline count as inside.
bool contains_point(const GammaCurve& curve, cplx z0);
double distance_to_filled_curve(const GammaCurve& curve, cplx z0);
double curve_diameter(const GammaCurve& curve);

StabilityReport classify(const RescaledSpectrum& P, const CurveScanPlan& plan = {});

inline double pti_from_distance(double d) {
  const double v = 1.0 - d / kPenrosePoint;
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace alber
