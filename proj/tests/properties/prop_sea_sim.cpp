#include <cmath>

#include "../support/fixtures.hpp"
#include "alber/fft.hpp"
#include "alber/sea_sim.hpp"
#include "alber/wave_stats.hpp"

using namespace alber;
using namespace alber::testing;

namespace {

// Broad Gaussian in k around k0, zero below 0.02 k0 and beyond the grid.
DiscreteSpectrum broad_spectrum(Rng& rng, double k0, double sigma_min, double sigma_max) {
  const double sigma = rng.uniform(sigma_min, sigma_max);
  const double m0 = rng.log_uniform(0.1, 10.0);
  const int n = 201;
  std::vector<double> k(n), s(n);
  const double lo = 0.02, hi = 1.0 + 6.0 * sigma;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double d = (x - 1.0) / sigma;
    k[i] = x * k0;
    s[i] = m0 / (std::sqrt(2.0 * std::numbers::pi) * sigma * k0) * std::exp(-0.5 * d * d);
  }
  return DiscreteSpectrum(std::move(k), std::move(s), k0, "broad");
}

// Sum of S on the simulation grid, the variance the draw targets.
double grid_variance(const DiscreteSpectrum& S, const SimGrid& g) {
  double v = 0.0;
  for (int j = 0; j < g.n; ++j) v += S.density_at(g.k0 + g.kappa(j)) * g.dk();
  return v;
}

// Surface on the lab-frame grid at the state's time.
std::vector<double> surface_snapshot(const SimGrid& g, const NlsParams& p, const EnvelopeState& s) {
  const std::vector<cplx> u = envelope_field(g, s.modes);
  std::vector<double> eta(g.n);
  for (int m = 0; m < g.n; ++m) {
    eta[m] = reconstruct_surface(u[m], p, m * g.dx() + p.group_velocity() * s.t, s.t);
  }
  return eta;
}

double relative_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

}  // namespace

ALBER_PROPERTY("sea_sim", "ensemble surface variance matches the spectrum", 100) {
  const double k0 = rng.log_uniform(0.02, 0.5);
  const DiscreteSpectrum S = broad_spectrum(rng, k0, 0.3, 0.6);
  const SimGrid g = SimGrid::standard(k0, 256, 2.0);
  const NlsParams p = NlsParams::deep_water(k0);
  const double target = grid_variance(S, g);
  const std::uint64_t base = rng.bits();
  double mean = 0.0;
  const int R = 100;
  for (int r = 0; r < R; ++r) {
    const Realization z = draw_realization(S, g, base + r);
    const std::vector<double> eta = surface_snapshot(g, p, {0.0, z.amplitudes});
    double v = 0.0;
    for (double e : eta) v += e * e;
    mean += v / g.n / R;
  }
  require(std::abs(mean - target) <= 0.05 * target,
          msg("ensemble variance ", mean, " vs spectral ", target));
}

ALBER_PROPERTY("sea_sim", "linear evolution keeps the surface Gaussian", 100) {
  const double k0 = rng.log_uniform(0.02, 0.5);
  const DiscreteSpectrum S = broad_spectrum(rng, k0, 0.25, 0.4);
  const SimGrid g = SimGrid::standard(k0, 4096, 2.0);
  const NlsParams p = NlsParams::deep_water(k0);
  const double T = p.period() * rng.uniform(10.0, 500.0);
  const std::uint64_t base = rng.bits();
  // 200 x 4096 samples, the sample count of 200 h of records at T0 / 16.
  MomentAccumulator acc;
  for (int r = 0; r < 200; ++r) {
    const Realization z = draw_realization(S, g, base + r);
    const EnvelopeState end = evolve(z, Backend::linear, p, T, std::min(T, max_time_step(p, g)), T);
    acc.add(surface_snapshot(g, p, end));
  }
  const double k = acc.excess_kurtosis();
  require(std::abs(k) <= 0.1, msg("excess kurtosis ", k, " after t = ", T, " s"));
}

ALBER_PROPERTY("sea_sim", "identical seeds give identical realizations", 100) {
  const DiscreteSpectrum S = random_wavenumber_spectrum(rng, 30, 60);
  const int n = 1 << rng.integer(4, 11);
  const SimGrid g = SimGrid::standard(S.k0(), n, rng.uniform(1.0, 10.0));
  const std::uint64_t seed = rng.bits();
  const Realization a = draw_realization(S, g, seed);
  const Realization b = draw_realization(S, g, seed);
  require(a.amplitudes.size() == static_cast<std::size_t>(n), "wrong mode count");
  for (int j = 0; j < n; ++j) {
    require(a.amplitudes[j].real() == b.amplitudes[j].real() &&
                a.amplitudes[j].imag() == b.amplitudes[j].imag(),
            msg("mode ", j, " differs for seed ", seed));
  }
}

ALBER_PROPERTY("sea_sim", "split-step error falls fourfold when dt halves", 100) {
  const double k0 = rng.log_uniform(0.02, 0.5);
  const SimGrid g = SimGrid::standard(k0, 256, 2.0);
  const NlsParams p = NlsParams::deep_water(k0);
  // sech envelope of steepness k0 a and width a few wavelengths
  const double a = rng.uniform(0.05, 0.15) / k0;
  const double w = rng.uniform(2.0, 6.0) * g.lambda0();
  const double c = g.x_max() * rng.uniform(0.3, 0.7);
  std::vector<cplx> u(g.n);
  for (int m = 0; m < g.n; ++m) u[m] = a / std::cosh((m * g.dx() - c) / w);
  Fft(g.n).forward(u);
  for (auto& v : u) v /= g.n;
  const Realization r{g, u, 0, "sech"};
  const double T = p.period() * rng.uniform(20.0, 60.0);
  const int m = static_cast<int>(std::ceil(T / max_time_step(p, g)));
  const auto run = [&](int steps) { return evolve(r, Backend::nls_split_step, p, T, T / steps, T).modes; };
  const auto ref = run(32 * m);
  const double e1 = relative_distance(run(m), ref);
  const double e2 = relative_distance(run(2 * m), ref);
  const double ratio = e1 / e2;
  require(ratio >= 3.0 && ratio <= 5.0, msg("error ratio ", ratio, " (", e1, " -> ", e2, ")"));
}
