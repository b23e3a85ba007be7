#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alber/sea_sim.hpp"
#include "alber/wave_stats.hpp"

namespace alber {

struct MonteCarloProtocol {
  int realizations = 100;
  double duration = 1800.0;  // s, per realization
  int probes = 4;
  double dt_out = 0.0;  // 0: T0 / 16
  double dt = 0.0;      // 0: max_time_step
  Backend backend = Backend::nls_split_step;
  std::uint64_t base_seed = 1;
  // Multiplies both the realization count and the duration.
  double scale = 1.0;
  int n = 1024;
  double k_max_factor = 8.0;
  // Rogue threshold from 4 sqrt(m0) instead of the pooled time-series Hs.
  bool spectral_threshold = false;
  unsigned workers = 0;

  int scaled_realizations() const;
  double scaled_duration() const;
  void validate() const;
};

struct SeaStateStats {
  std::string id;
  double hs_timeseries = 0.0;  // mean of the top third of all pooled wave heights
  double hs_spectral = 0.0;    // 4 sqrt(m0)
  double threshold = 0.0;
  double excess_kurtosis = 0.0;
  double p_rogue = 0.0;  // P(C > threshold)
  double p_rogue_timeseries = 0.0;
  double p_rogue_spectral = 0.0;
  double variance = 0.0;
  std::uint64_t crests = 0;
  std::uint64_t exceedances = 0;
  std::uint64_t waves = 0;
  std::uint64_t samples = 0;
  std::uint64_t records = 0;
};

// seed of realization i is base_seed + i.
SeaStateStats run_monte_carlo(const DiscreteSpectrum& S, const MonteCarloProtocol& protocol);

// Pools crest records and moments from many probe series.
SeaStateStats summarize(const std::string& id, const std::vector<CrestRecord>& records,
                        const MomentAccumulator& moments, double m0, bool spectral_threshold);

}  // namespace alber
