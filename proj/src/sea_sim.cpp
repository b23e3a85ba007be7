#include "alber/sea_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "alber/error.hpp"
#include "alber/fft.hpp"

namespace alber {

void SimGrid::validate() const {
  if (n < 4 || (n & (n - 1)) != 0) throw InputError("grid: n must be a power of two >= 4");
  if (!(k0 > 0.0) || !std::isfinite(k0)) throw InputError("grid: k0 must be > 0");
  if (!(k_max > 0.0) || !std::isfinite(k_max)) throw InputError("grid: k_max must be > 0");
}

NlsParams NlsParams::deep_water(double k0, double gravity) {
  if (!(k0 > 0.0)) throw InputError("nls: k0 must be > 0");
  if (!(gravity > 0.0)) throw InputError("nls: gravity must be > 0");
  NlsParams p;
  p.k0 = k0;
  p.gravity = gravity;
  const double sg = std::sqrt(gravity);
  p.p = sg / (8.0 * std::pow(k0, 1.5));
  p.q = 0.5 * sg * std::pow(k0, 2.5);
  p.omega0 = std::sqrt(gravity * k0);
  return p;
}

Realization draw_realization(const DiscreteSpectrum& S, const SimGrid& grid, std::uint64_t seed) {
  grid.validate();
  Realization r;
  r.grid = grid;
  r.seed = seed;
  r.id = S.id();
  r.amplitudes.resize(grid.n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double dk = grid.dk();
  for (int j = 0; j < grid.n; ++j) {
    const double re = normal(rng);
    const double im = normal(rng);
    const double s = S.density_at(grid.k0 + grid.kappa(j));
    r.amplitudes[j] = cplx(re, im) * std::sqrt(2.0 * s * dk);
  }
  return r;
}

Backend parse_backend(const std::string& name) {
  if (name == "linear") return Backend::linear;
  if (name == "nls" || name == "nls_split_step" || name == "split-step") {
    return Backend::nls_split_step;
  }
  throw InputError("unknown backend '" + name + "' (expected linear|nls_split_step)");
}

std::string to_string(Backend b) {
  return b == Backend::linear ? "linear" : "nls_split_step";
}

double max_time_step(const NlsParams& params, const SimGrid& grid) {
  return 0.1 / (std::abs(params.p) * grid.k_max * grid.k_max);
}

EnvelopeState evolve(const Realization& r, Backend backend, const NlsParams& params, double T,
                     double dt, double dt_out, const SnapshotObserver& observer) {
  const SimGrid& grid = r.grid;
  grid.validate();
  if (static_cast<int>(r.amplitudes.size()) != grid.n) {
    throw InputError("evolve: realization does not match its grid");
  }
  if (!(T >= 0.0) || !std::isfinite(T)) throw InputError("evolve: duration must be >= 0");
  if (!(dt > 0.0) || !(dt_out > 0.0)) throw InputError("evolve: time steps must be > 0");
  const double dt_max = max_time_step(params, grid);
  if (dt > dt_max * (1.0 + 1e-12)) {
    throw InputError("evolve: dt = " + std::to_string(dt) + " s exceeds the phase-resolution limit " +
                     std::to_string(dt_max) + " s (0.1 / (p k_max^2))");
  }

  const long outputs = static_cast<long>(std::floor(T / dt_out + 1e-9));
  const long sub = std::max(1L, static_cast<long>(std::ceil(dt_out / dt - 1e-9)));
  const double h = dt_out / sub;
  const int n = grid.n;

  EnvelopeState state{0.0, r.amplitudes};
  if (observer) observer(state);

  if (backend == Backend::linear) {
    std::vector<int> active;
    for (int j = 0; j < n; ++j) {
      if (r.amplitudes[j] != cplx{}) active.push_back(j);
    }
    for (long k = 1; k <= outputs; ++k) {
      state.t = k * dt_out;
      for (int j : active) {
        const double kap = grid.kappa(j);
        state.modes[j] = r.amplitudes[j] * std::polar(1.0, params.p * kap * kap * state.t);
      }
      if (observer) observer(state);
    }
    return state;
  }

  const Fft fft(n);
  std::vector<cplx> half(n);
  for (int j = 0; j < n; ++j) {
    const double kap = grid.kappa(j);
    half[j] = std::polar(1.0, params.p * kap * kap * 0.5 * h);
  }
  std::vector<cplx> u(state.modes);
  const double inv_n = 1.0 / n;
  for (long k = 1; k <= outputs; ++k) {
    for (long s = 0; s < sub; ++s) {
      for (int j = 0; j < n; ++j) u[j] *= half[j];
      fft.inverse(u);
      for (int m = 0; m < n; ++m) u[m] *= std::polar(1.0, -params.q * std::norm(u[m]) * h);
      fft.forward(u);
      for (int j = 0; j < n; ++j) u[j] *= half[j] * inv_n;
    }
    state.t = k * dt_out;
    state.modes = u;
    if (observer) observer(state);
  }
  return state;
}

FieldHistory record_history(const Realization& r, Backend backend, const NlsParams& params,
                            double T, double dt, double dt_out) {
  FieldHistory h{r.grid, params, {}};
  evolve(r, backend, params, T, dt, dt_out,
         [&](const EnvelopeState& s) { h.snapshots.push_back(s); });
  return h;
}

std::vector<cplx> envelope_field(const SimGrid& grid, const std::vector<cplx>& modes) {
  if (static_cast<int>(modes.size()) != grid.n) throw InputError("envelope: size mismatch");
  std::vector<cplx> u(modes);
  Fft(grid.n).inverse(u);
  return u;
}

double l2_norm(const std::vector<cplx>& field) {
  double s = 0.0;
  for (const auto& v : field) s += std::norm(v);
  return std::sqrt(s);
}

namespace {

// sum_j modes[j] e^{i kappa_j xi} over signed indices [lo, hi].
cplx mode_sum(const SimGrid& grid, const std::vector<cplx>& modes, double xi, int lo, int hi) {
  const int n = grid.n;
  const double dk = grid.dk();
  const cplx step = std::polar(1.0, dk * xi);
  cplx phase = std::polar(1.0, lo * dk * xi);
  cplx sum{};
  for (int s = lo; s <= hi; ++s) {
    const int j = s < 0 ? s + n : s;
    sum += modes[j] * phase;
    phase *= step;
  }
  return sum;
}

}  // namespace

cplx envelope_at(const SimGrid& grid, const NlsParams& params, const std::vector<cplx>& modes,
                 double x, double t) {
  const double xi = x - params.group_velocity() * t;
  return mode_sum(grid, modes, xi, -grid.n / 2, grid.n / 2 - 1);
}

std::vector<double> default_probe_locations(const SimGrid& grid, int count) {
  if (count < 1) throw InputError("probes: count must be >= 1");
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(grid.x_max() * i / count);
  return xs;
}

std::vector<double> validate_probes(const SimGrid& grid, std::vector<double> locations,
                                    const std::function<void(const std::string&)>& warn) {
  const double L = grid.x_max();
  for (double x : locations) {
    if (!(x >= 0.0) || !(x < L)) {
      throw InputError("probe at x = " + std::to_string(x) + " m is outside [0, " +
                       std::to_string(L) + ")");
    }
  }
  std::vector<double> out;
  for (double x : locations) {
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](double y) { return std::abs(x - y) <= 1e-12 * L; });
    if (dup) {
      if (warn) warn("duplicate probe location " + std::to_string(x) + " m removed");
    } else {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<ProbeSeries> probe_series(const FieldHistory& history,
                                      const std::vector<double>& locations, double dt_out) {
  const auto xs = validate_probes(history.grid, locations);
  std::vector<ProbeSeries> out;
  if (history.snapshots.empty()) return out;
  double spacing = dt_out;
  if (history.snapshots.size() > 1) spacing = history.snapshots[1].t - history.snapshots[0].t;
  const long stride = std::max(1L, std::lround(dt_out / spacing));
  for (double x : xs) {
    ProbeSeries p{x, stride * spacing, {}};
    for (std::size_t k = 0; k < history.snapshots.size(); k += stride) {
      const auto& s = history.snapshots[k];
      p.eta.push_back(reconstruct_surface(envelope_at(history.grid, history.params, s.modes, x, s.t),
                                          history.params, x, s.t));
    }
    out.push_back(std::move(p));
  }
  return out;
}

ProbeRecorder::ProbeRecorder(const SimGrid& grid, const NlsParams& params,
                             std::vector<double> locations, double dt_out, bool sparse_modes)
    : grid_(grid), params_(params), sparse_(sparse_modes) {
  for (double x : validate_probes(grid, std::move(locations))) {
    series_.push_back({x, dt_out, {}});
  }
}

void ProbeRecorder::operator()(const EnvelopeState& state) {
  int lo = -grid_.n / 2;
  int hi = grid_.n / 2 - 1;
  if (sparse_) {
    if (active_.empty()) {
      // signed index span of the nonzero modes, fixed from the first snapshot
      int a = grid_.n;
      int b = -grid_.n;
      for (int j = 0; j < grid_.n; ++j) {
        if (state.modes[j] == cplx{}) continue;
        const int s = j < grid_.n / 2 ? j : j - grid_.n;
        a = std::min(a, s);
        b = std::max(b, s);
      }
      if (a > b) a = b = 0;
      active_ = {a, b};
    }
    lo = active_[0];
    hi = active_[1];
  }
  const double xi_shift = params_.group_velocity() * state.t;
  for (auto& p : series_) {
    const cplx u = mode_sum(grid_, state.modes, p.x - xi_shift, lo, hi);
    p.eta.push_back(reconstruct_surface(u, params_, p.x, state.t));
  }
}

std::vector<ProbeSeries> simulate_probes(const Realization& r, Backend backend,
                                         const NlsParams& params, double T, double dt,
                                         double dt_out, const std::vector<double>& locations) {
  ProbeRecorder rec(r.grid, params, locations, dt_out, backend == Backend::linear);
  evolve(r, backend, params, T, dt, dt_out, [&](const EnvelopeState& s) { rec(s); });
  return rec.take();
}

}  // namespace alber
