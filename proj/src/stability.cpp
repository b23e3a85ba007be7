#include "alber/stability.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "alber/error.hpp"
#include "alber/parallel.hpp"

namespace alber {

std::vector<double> CurveScanPlan::default_sweep() {
  std::vector<double> xs;
  for (int i = 0; i < 16; ++i) xs.push_back(std::pow(10.0, -4.0 + 4.0 * i / 15.0));
  xs.push_back(5e-4);
  std::sort(xs.begin(), xs.end());
  return xs;
}

void CurveScanPlan::validate() const {
  if (X_values.empty()) throw InputError("scan plan: no X values");
  for (std::size_t i = 0; i < X_values.size(); ++i) {
    if (!(X_values[i] > 0.0) || !std::isfinite(X_values[i])) {
      throw InputError("scan plan: X values must be positive");
    }
    if (i > 0 && !(X_values[i] > X_values[i - 1])) {
      throw InputError("scan plan: X values must be sorted and distinct");
    }
  }
  if (!(dilation >= 0.0)) throw InputError("scan plan: dilation must be >= 0");
  if (base_points < 8) throw InputError("scan plan: at least 8 base points");
  if (!(chord_tol > 0.0)) throw InputError("scan plan: chord tolerance must be > 0");
  if (reference_only && !(reference_X > 0.0)) throw InputError("scan plan: bad reference X");
  quad.validate();
}

SupportedFunction divided_difference_function(const RescaledSpectrum& P, double X) {
  SupportedFunction u;
  if (P.is_zero()) return u;
  const double h = 0.5 * std::abs(X);
  u.lo = P.lo() - h;
  u.hi = P.hi() + h;
  u.f = [P, X](double s) { return P.divided_difference(X, s); };
  for (double n : P.nodes()) {
    u.breakpoints.push_back(n - h);
    if (h > 0.0) u.breakpoints.push_back(n + h);
  }
  std::sort(u.breakpoints.begin(), u.breakpoints.end());
  return u;
}

namespace {

std::vector<double> base_grid(const RescaledSpectrum& P, double X, const CurveScanPlan& plan) {
  const double h = 0.5 * X;
  const double a = P.lo() - h;
  const double b = P.hi() + h;
  const double w = b - a;
  const double t0 = a - plan.dilation * w;
  const double t1 = b + plan.dilation * w;
  std::vector<double> ts;
  for (int i = 0; i < plan.base_points; ++i) {
    ts.push_back(t0 + (t1 - t0) * i / (plan.base_points - 1));
  }
  const auto nodes = P.nodes();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    ts.push_back(nodes[j] - h);
    ts.push_back(nodes[j] + h);
    if (j + 1 < nodes.size()) {
      const double m = 0.5 * (nodes[j] + nodes[j + 1]);
      ts.push_back(m - h);
      ts.push_back(m + h);
    }
  }
  std::sort(ts.begin(), ts.end());
  const double merge = 1e-13 * std::max({std::abs(t0), std::abs(t1), w});
  std::vector<double> out;
  for (double t : ts) {
    if (out.empty() || t - out.back() > merge) out.push_back(t);
  }
  return out;
}

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const std::function<double(double)>& f, double a, double b, int sa) {
  for (int it = 0; it < 200 && b - a > 1e-10; ++it) {
    const double m = 0.5 * (a + b);
    const int sm = sgn(f(m));
    if (sm == sa || sm == 0) {
      if (sm == 0) return m;
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> crossings_on(const SupportedFunction& u, const std::vector<double>& grid) {
  std::vector<double> out;
  if (u.empty()) return out;
  std::vector<double> ts;
  for (double t : grid) {
    if (t >= u.lo && t <= u.hi) ts.push_back(t);
  }
  std::vector<double> refined;
  refined.reserve(2 * ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    refined.push_back(ts[i]);
    if (i + 1 < ts.size()) refined.push_back(0.5 * (ts[i] + ts[i + 1]));
  }
  double last_t = 0.0;
  int last_s = 0;
  for (double t : refined) {
    const int s = sgn(u.f(t));
    if (s == 0) continue;
    if (last_s != 0 && s != last_s) out.push_back(bisect(u.f, last_t, t, last_s));
    last_t = t;
    last_s = s;
  }
  return out;
}

double seg_distance(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double s = ((p - a) * std::conj(d)).real() / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(p - (a + s * d));
}

double curve_scale(const GammaCurve& c, cplx z0) {
  double s = std::abs(z0);
  for (const auto& p : c.points) s = std::max(s, std::abs(p.z));
  return s > 0.0 ? s : 1.0;
}

std::size_t distinct_vertices(const GammaCurve& c, double tol) {
  std::vector<cplx> seen;
  for (const auto& p : c.points) {
    bool dup = false;
    for (const auto& q : seen) {
      if (std::abs(p.z - q) <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      seen.push_back(p.z);
      if (seen.size() > 2) break;
    }
  }
  return seen.size();
}

double min_segment_distance(const GammaCurve& c, cplx z0) {
  const auto& pts = c.points;
  if (pts.empty()) return std::abs(z0);
  double best = std::abs(z0 - pts.front().z);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const cplx a = pts[i].z;
    const cplx b = pts[(i + 1) % pts.size()].z;
    best = std::min(best, seg_distance(z0, a, b));
  }
  return best;
}

}  // namespace

std::vector<double> real_axis_crossings(const RescaledSpectrum& P, double X,
                                        const CurveScanPlan& plan) {
  return crossings_on(divided_difference_function(P, X), base_grid(P, X, plan));
}

GammaCurve gamma_curve(const RescaledSpectrum& P, double X, const CurveScanPlan& plan) {
  plan.validate();
  GammaCurve curve;
  curve.X = X;
  const SupportedFunction u = divided_difference_function(P, X);
  if (u.empty()) {
    curve.points.push_back({std::numeric_limits<double>::infinity(), cplx{}, 0.0});
    return curve;
  }

  std::vector<double> ts = base_grid(P, X, plan);
  curve.crossings = crossings_on(u, ts);
  ts.insert(ts.end(), curve.crossings.begin(), curve.crossings.end());
  ts.push_back(u.lo);
  ts.push_back(u.hi);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  auto eval = [&](double t) {
    const TransformSample s = regularized_transform(u, t, plan.quad);
    curve.max_error = std::max(curve.max_error, s.est_error);
    ++curve.evaluations;
    return CurvePoint{t, s.value, s.est_error};
  };

  std::vector<CurvePoint> pts;
  pts.reserve(ts.size());
  for (double t : ts) pts.push_back(eval(t));

  for (int pass = 0; pass < plan.refine_passes; ++pass) {
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, std::abs(p.z));
    if (scale == 0.0) break;
    const double limit = plan.chord_tol * scale;
    std::vector<CurvePoint> next;
    next.reserve(pts.size() * 2);
    bool inserted = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      next.push_back(pts[i]);
      if (i + 1 == pts.size()) break;
      if (std::abs(pts[i + 1].z - pts[i].z) > limit &&
          pts.size() + (next.size() - i) < plan.max_points &&
          pts[i + 1].t - pts[i].t > 1e-12) {
        next.push_back(eval(0.5 * (pts[i].t + pts[i + 1].t)));
        inserted = true;
      }
    }
    pts.swap(next);
    if (!inserted) break;
  }

  pts.push_back({std::numeric_limits<double>::infinity(), cplx{}, 0.0});
  curve.points = std::move(pts);
  return curve;
}

FastCheck fast_stability_check(const RescaledSpectrum& P, double X, const CurveScanPlan& plan) {
  FastCheck out;
  out.X = X;
  const SupportedFunction u = divided_difference_function(P, X);
  if (u.empty()) return out;
  out.crossings = crossings_on(u, base_grid(P, X, plan));
  std::vector<double> probes = out.crossings;
  probes.push_back(u.lo);
  probes.push_back(u.hi);
  for (double t : probes) {
    const TransformSample s = regularized_transform(u, t, plan.quad);
    if (s.value.real() > out.max_crossing) {
      out.max_crossing = s.value.real();
      out.max_crossing_error = s.est_error;
    }
  }
  out.excluded = out.max_crossing < kPenrosePoint;
  return out;
}

bool contains_point(const GammaCurve& curve, cplx z0) {
  const auto& pts = curve.points;
  if (pts.empty()) return false;
  const double tol = 1e-12 * curve_scale(curve, z0);
  if (distinct_vertices(curve, tol) <= 2) {
    return std::any_of(pts.begin(), pts.end(),
                       [&](const CurvePoint& p) { return std::abs(p.z - z0) <= tol; });
  }
  if (min_segment_distance(curve, z0) <= tol) return true;

  int winding = 0;
  const double x = z0.real();
  const double y = z0.imag();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const cplx a = pts[i].z;
    const cplx b = pts[(i + 1) % pts.size()].z;
    const double cross = (b.real() - a.real()) * (y - a.imag()) - (x - a.real()) * (b.imag() - a.imag());
    if (a.imag() <= y) {
      if (b.imag() > y && cross > 0.0) ++winding;
    } else if (b.imag() <= y && cross < 0.0) {
      --winding;
    }
  }
  return winding != 0;
}

double distance_to_filled_curve(const GammaCurve& curve, cplx z0) {
  if (contains_point(curve, z0)) return 0.0;
  return min_segment_distance(curve, z0);
}

double curve_diameter(const GammaCurve& curve) {
  double best = 0.0;
  const auto& pts = curve.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, std::abs(pts[i].z - pts[j].z));
    }
  }
  return best;
}

StabilityReport classify(const RescaledSpectrum& P, const CurveScanPlan& plan_in) {
  CurveScanPlan plan = plan_in;
  if (plan.reference_only &&
      std::find(plan.X_values.begin(), plan.X_values.end(), plan.reference_X) ==
          plan.X_values.end()) {
    plan.X_values.push_back(plan.reference_X);
    std::sort(plan.X_values.begin(), plan.X_values.end());
  }
  plan.validate();

  StabilityReport report;
  report.per_x.resize(plan.X_values.size());
  std::mutex failure_mutex;
  const unsigned workers = plan.workers ? plan.workers : default_workers();

  parallel_for(
      plan.X_values.size(),
      [&](std::size_t i) {
        XDiagnostics& d = report.per_x[i];
        d.X = plan.X_values[i];
        try {
          const FastCheck fast = fast_stability_check(P, d.X, plan);
          d.max_crossing = fast.max_crossing;
          d.fast_excluded = fast.excluded;
          const bool need = !plan.reference_only || !fast.excluded || d.X == plan.reference_X;
          if (!need) return;
          const GammaCurve curve = gamma_curve(P, d.X, plan);
          d.curve_built = true;
          d.max_error = curve.max_error;
          d.diameter = curve_diameter(curve);
          d.contains = contains_point(curve, kPenrosePoint);
          d.distance = d.contains ? 0.0 : distance_to_filled_curve(curve, kPenrosePoint);
        } catch (const QuadratureFailure& e) {
          std::lock_guard lock(failure_mutex);
          report.complete = false;
          if (report.failure.empty()) report.failure = e.what();
        }
      },
      workers);

  for (const auto& d : report.per_x) {
    if (d.contains) report.unstable_wavenumbers.push_back(d.X);
    if (d.curve_built) report.distance = std::min(report.distance, d.distance);
  }
  report.stable = report.unstable_wavenumbers.empty();
  if (!report.stable) report.distance = 0.0;
  report.pti = pti_from_distance(report.distance);
  return report;
}

}  // namespace alber
