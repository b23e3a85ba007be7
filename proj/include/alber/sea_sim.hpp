#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "alber/spectra.hpp"

namespace alber {

using cplx = std::complex<double>;

// Envelope wavenumbers kappa in [-k_max, k_max), FFT order. Periodic domain of
// length x_max = 2 pi / dk.
struct SimGrid {
  int n = 1024;
  double k0 = 1.0;
  double k_max = 8.0;

  static SimGrid standard(double k0, int n = 1024, double k_max_factor = 8.0) {
    return {n, k0, k_max_factor * k0};
  }
  double dk() const { return 2.0 * k_max / n; }
  double x_max() const { return 2.0 * std::numbers::pi / dk(); }
  double dx() const { return x_max() / n; }
  double lambda0() const { return 2.0 * std::numbers::pi / k0; }
  double kappa(int j) const { return (j < n / 2 ? j : j - n) * dk(); }
  void validate() const;
};

struct NlsParams {
  double p = 0.0;
  double q = 0.0;
  double omega0 = 0.0;
  double k0 = 0.0;
  double gravity = kStandardGravity;

  static NlsParams deep_water(double k0, double gravity = kStandardGravity);
  double group_velocity() const { return omega0 / (2.0 * k0); }
  double period() const { return 2.0 * std::numbers::pi / omega0; }
};

struct Realization {
  SimGrid grid;
  std::vector<cplx> amplitudes;  // A_j, FFT order
  std::uint64_t seed = 0;
  std::string id;
};

// Z_j with Re, Im ~ N(0, 1/2), A_j = Z_j sqrt(2 S(k0 + kappa_j) dk). All n
// normals are drawn in index order regardless of S.
Realization draw_realization(const DiscreteSpectrum& S, const SimGrid& grid, std::uint64_t seed);

enum class Backend { linear, nls_split_step };
Backend parse_backend(const std::string& name);
std::string to_string(Backend b);

// Largest admissible step: 0.1 / (p k_max^2).
double max_time_step(const NlsParams& params, const SimGrid& grid);

// Envelope state in Fourier space. The envelope travels with the group
// velocity, u_lab(x, t) = u(x - c_g t, t).
struct EnvelopeState {
  double t = 0.0;
  std::vector<cplx> modes;
};

using SnapshotObserver = std::function<void(const EnvelopeState&)>;

// Evolves from t = 0 to T. The observer is called at t = 0 and every dt_out
// (dt_out must be a positive multiple of the internal step after rounding the
// step down to divide dt_out). Throws InputError when dt exceeds
// max_time_step.
EnvelopeState evolve(const Realization& r, Backend backend, const NlsParams& params, double T,
                     double dt, double dt_out, const SnapshotObserver& observer = {});

struct FieldHistory {
  SimGrid grid;
  NlsParams params;
  std::vector<EnvelopeState> snapshots;
};

FieldHistory record_history(const Realization& r, Backend backend, const NlsParams& params,
                            double T, double dt, double dt_out);

// Physical-space envelope on the co-moving grid x_m = m dx.
std::vector<cplx> envelope_field(const SimGrid& grid, const std::vector<cplx>& modes);
double l2_norm(const std::vector<cplx>& field);

inline double reconstruct_surface(cplx u, const NlsParams& params, double x, double t) {
  return (u * std::polar(1.0, params.k0 * x - params.omega0 * t)).real();
}

// Envelope at lab-frame position x and time t from its modes.
cplx envelope_at(const SimGrid& grid, const NlsParams& params, const std::vector<cplx>& modes,
                 double x, double t);

struct ProbeSeries {
  double x = 0.0;
  double dt = 0.0;
  std::vector<double> eta;
  double duration() const { return eta.empty() ? 0.0 : dt * (eta.size() - 1); }
};

// count equispaced probes over [0, x_max).
std::vector<double> default_probe_locations(const SimGrid& grid, int count = 4);
// Rejects out-of-domain locations; removes duplicates (warning via callback).
std::vector<double> validate_probes(const SimGrid& grid, std::vector<double> locations,
                                    const std::function<void(const std::string&)>& warn = {});

std::vector<ProbeSeries> probe_series(const FieldHistory& history,
                                      const std::vector<double>& locations, double dt_out);

// Streams probe samples without storing snapshots.
class ProbeRecorder {
 public:
  ProbeRecorder(const SimGrid& grid, const NlsParams& params, std::vector<double> locations,
                double dt_out, bool sparse_modes);
  void operator()(const EnvelopeState& state);
  const std::vector<ProbeSeries>& series() const { return series_; }
  std::vector<ProbeSeries> take() { return std::move(series_); }

 private:
  SimGrid grid_;
  NlsParams params_;
  std::vector<ProbeSeries> series_;
  bool sparse_;
  std::vector<int> active_;
};

std::vector<ProbeSeries> simulate_probes(const Realization& r, Backend backend,
                                         const NlsParams& params, double T, double dt,
                                         double dt_out, const std::vector<double>& locations);

}  // namespace alber
