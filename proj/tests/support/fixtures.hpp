#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "alber/crossing.hpp"
#include "alber/io.hpp"
#include "alber/spectra.hpp"
#include "alber/stability.hpp"
#include "property.hpp"

namespace alber::testing {

// Dawson function F(y) = exp(-y^2) * integral_0^y exp(t^2) dt.
inline double dawson(double y) {
  if (std::abs(y) < 0.2) {
    const double y2 = y * y;
    return y * (1.0 - y2 * (2.0 / 3.0 - y2 * (4.0 / 15.0 - y2 * (8.0 / 105.0 - y2 * 16.0 / 945.0))));
  }
  const int n = 4000;
  const double h = y / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * std::exp(t * t - y * y);
  }
  return s * h / 3.0;
}

// Nondimensional Gaussian A / (sqrt(2 pi) sigma) exp(-(k-1)^2 / 2 sigma^2) on
// nodes spanning +-span sigma.
inline RescaledSpectrum gaussian_rescaled(double A, double sigma, int nodes = 121,
                                          double span = 6.0) {
  std::vector<double> x(nodes), y(nodes);
  for (int i = 0; i < nodes; ++i) {
    x[i] = 1.0 - span * sigma + 2.0 * span * sigma * i / (nodes - 1);
    const double d = (x[i] - 1.0) / sigma;
    y[i] = A / (std::sqrt(2.0 * std::numbers::pi) * sigma) * std::exp(-0.5 * d * d);
  }
  return RescaledSpectrum(std::move(x), std::move(y), 1.0);
}

// Physical-axis Gaussian with the same shape, k0 = 1.
inline DiscreteSpectrum gaussian_spectrum(double A, double sigma, int nodes = 121,
                                          double span = 6.0, double k0 = 1.0) {
  std::vector<double> x(nodes), y(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double k = 1.0 - span * sigma + 2.0 * span * sigma * i / (nodes - 1);
    const double d = (k - 1.0) / sigma;
    x[i] = k * k0;
    y[i] = A / (std::sqrt(2.0 * std::numbers::pi) * sigma) * std::exp(-0.5 * d * d) /
           (k0 * k0 * k0);
  }
  return DiscreteSpectrum(std::move(x), std::move(y), k0, "gaussian");
}

// Real-axis crossing of the curve for the Gaussian above (at t = 1), from the
// closed-form Hilbert transform of a Gaussian.
inline double gaussian_crossing(double A, double sigma, double X) {
  const double r2 = std::numbers::sqrt2;
  return 2.0 * r2 * A / (std::numbers::pi * sigma * X) * dawson(X / (2.0 * r2 * sigma));
}

// Width at which the crossing equals 1/4pi for the given X (bisection).
inline double gaussian_sigma_star(double A, double X) {
  double lo = 1e-3, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gaussian_crossing(A, mid, X) > kPenrosePoint ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Uniform omega grid, random sum of bumps, tapered to exactly zero at the ends.
inline FrequencySpectrum random_frequency_spectrum(Rng& rng) {
  const int n = rng.integer(60, 400);
  const double w0 = rng.uniform(0.2, 2.0);
  const double w1 = w0 * rng.uniform(1.5, 4.0);
  const int bumps = rng.integer(1, 3);
  std::vector<double> c(bumps), s(bumps), a(bumps);
  for (int b = 0; b < bumps; ++b) {
    c[b] = rng.uniform(w0, w1);
    s[b] = (w1 - w0) * rng.uniform(0.03, 0.3);
    a[b] = rng.log_uniform(0.01, 10.0);
  }
  std::vector<double> omega(n), energy(n);
  for (int i = 0; i < n; ++i) {
    omega[i] = w0 + (w1 - w0) * i / (n - 1);
    double e = 0.0;
    for (int b = 0; b < bumps; ++b) {
      const double d = (omega[i] - c[b]) / s[b];
      e += a[b] * std::exp(-0.5 * d * d);
    }
    const double taper = std::sin(std::numbers::pi * i / (n - 1));
    energy[i] = (i == 0 || i == n - 1) ? 0.0 : e * taper * taper;
  }
  return FrequencySpectrum(std::move(omega), std::move(energy));
}

// Unimodal-or-bimodal wavenumber spectrum with zero end samples around k0.
inline DiscreteSpectrum random_wavenumber_spectrum(Rng& rng, int min_nodes = 30,
                                                   int max_nodes = 120) {
  const double k0 = rng.log_uniform(0.01, 1.0);
  const int n = rng.integer(min_nodes, max_nodes);
  const double sigma = rng.uniform(0.03, 0.2);
  const double lo = std::max(0.05, 1.0 - 5.0 * sigma);
  const double hi = 1.0 + 5.0 * sigma;
  const double A = rng.log_uniform(2e-4, 1e-2);  // nondimensional mass
  const bool bimodal = rng.chance(0.25);
  const double c2 = 1.0 + rng.uniform(-2.0, 2.0) * sigma;
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    const double k = lo + (hi - lo) * i / (n - 1);
    double v = std::exp(-0.5 * std::pow((k - 1.0) / sigma, 2));
    if (bimodal) v += 0.6 * std::exp(-0.5 * std::pow((k - c2) / (0.5 * sigma), 2));
    const double taper = std::sin(std::numbers::pi * i / (n - 1));
    x[i] = k * k0;
    y[i] = (i == 0 || i == n - 1) ? 0.0 : v * taper * taper;
  }
  double mass = trapezoid(x, y) * k0 * k0;
  for (auto& v : y) v *= A / mass;
  return DiscreteSpectrum(std::move(x), std::move(y), k0, "random");
}

inline JonswapParams random_jonswap(Rng& rng) {
  JonswapParams p;
  p.fp = rng.uniform(0.06, 0.2);
  p.alpha = rng.uniform(0.004, 0.02);
  p.gamma = rng.uniform(1.0, 7.0);
  return p;
}

// Coarse plan for property sweeps.
inline CurveScanPlan quick_plan(std::vector<double> X = {1e-4, 1e-2, 0.3}) {
  CurveScanPlan plan;
  plan.X_values = std::move(X);
  plan.base_points = 64;
  plan.refine_passes = 3;
  plan.chord_tol = 0.03;
  plan.workers = 1;
  return plan;
}

inline GammaCurve polygon(const std::vector<cplx>& z) {
  GammaCurve c;
  for (std::size_t i = 0; i < z.size(); ++i) c.points.push_back({static_cast<double>(i), z[i], 0.0});
  return c;
}

// Random star-shaped polygon around a random centre.
inline GammaCurve random_polygon(Rng& rng, double scale = 0.1) {
  const int n = rng.integer(3, 40);
  const cplx centre(rng.uniform(-scale, 2.0 * scale), rng.uniform(-scale, scale));
  std::vector<double> ang(n);
  for (auto& a : ang) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  std::sort(ang.begin(), ang.end());
  std::vector<cplx> z;
  for (double a : ang) z.push_back(centre + std::polar(scale * rng.uniform(0.2, 1.5), a));
  return polygon(z);
}

inline WavetrainCoefficients random_wavetrain(Rng& rng) {
  WavetrainCoefficients w;
  w.alpha = rng.uniform(0.2, 2.0) / (8.0 * std::numbers::pi * std::numbers::pi);
  w.beta = rng.uniform(0.2, 2.0) / (8.0 * std::numbers::pi * std::numbers::pi);
  w.gamma = rng.uniform(-0.5, 0.5) * 2.0 * std::sqrt(w.alpha * w.beta);
  w.xi = rng.uniform(0.5, 3.0);
  w.zeta = rng.uniform(-1.0, 1.0);
  w.C = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  return w;
}

inline HomogeneousBackground2D random_background(Rng& rng) {
  const double mass = rng.log_uniform(1e-4, 5e-3);
  const Vec2 c{rng.uniform(0.7, 1.3), rng.uniform(-0.3, 0.3)};
  return HomogeneousBackground2D::gaussian(mass, c, rng.uniform(0.03, 0.2), rng.uniform(0.03, 0.2));
}

inline ContourParams quick_contour() {
  ContourParams p;
  p.base_points = 96;
  p.refine_passes = 6;
  p.transfer.marginal_points = 257;
  p.workers = 1;
  return p;
}

}  // namespace alber::testing
