#include "alber/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "alber/error.hpp"
#include "alber/parallel.hpp"

namespace alber {

int MonteCarloProtocol::scaled_realizations() const {
  return std::max(1, static_cast<int>(std::lround(realizations * scale)));
}

double MonteCarloProtocol::scaled_duration() const { return duration * scale; }

void MonteCarloProtocol::validate() const {
  if (realizations < 1) throw InputError("monte carlo: realizations must be >= 1");
  if (!(duration > 0.0)) throw InputError("monte carlo: duration must be > 0");
  if (probes < 1) throw InputError("monte carlo: probes must be >= 1");
  if (!(scale > 0.0)) throw InputError("monte carlo: scale must be > 0");
  if (dt_out < 0.0 || dt < 0.0) throw InputError("monte carlo: time steps must be >= 0");
  if (!(k_max_factor > 0.0)) throw InputError("monte carlo: k_max factor must be > 0");
}

SeaStateStats summarize(const std::string& id, const std::vector<CrestRecord>& records,
                        const MomentAccumulator& moments, double m0, bool spectral_threshold) {
  SeaStateStats st;
  st.id = id;
  st.records = records.size();
  st.samples = moments.count();
  st.variance = moments.variance();
  st.excess_kurtosis = moments.count() >= 4 && moments.variance() > 0.0
                           ? moments.excess_kurtosis()
                           : 0.0;
  std::vector<double> heights;
  std::vector<double> crests;
  for (const auto& r : records) {
    heights.insert(heights.end(), r.heights.begin(), r.heights.end());
    crests.insert(crests.end(), r.crests.begin(), r.crests.end());
  }
  st.waves = heights.size();
  st.crests = crests.size();
  st.hs_spectral = 4.0 * std::sqrt(std::max(0.0, m0));
  if (heights.size() >= 3) st.hs_timeseries = significant_wave_height(heights);
  if (!crests.empty()) {
    st.p_rogue_timeseries = crest_exceedance(crests, st.hs_timeseries);
    st.p_rogue_spectral = crest_exceedance(crests, st.hs_spectral);
  }
  st.threshold = spectral_threshold ? st.hs_spectral : st.hs_timeseries;
  st.p_rogue = spectral_threshold ? st.p_rogue_spectral : st.p_rogue_timeseries;
  st.exceedances = static_cast<std::uint64_t>(std::llround(st.p_rogue * st.crests));
  return st;
}

SeaStateStats run_monte_carlo(const DiscreteSpectrum& S, const MonteCarloProtocol& protocol) {
  protocol.validate();
  const SimGrid grid = SimGrid::standard(S.k0(), protocol.n, protocol.k_max_factor);
  grid.validate();
  const NlsParams params = NlsParams::deep_water(S.k0());
  const double dt_out = protocol.dt_out > 0.0 ? protocol.dt_out : params.period() / 16.0;
  const double dt = protocol.dt > 0.0 ? protocol.dt : std::min(max_time_step(params, grid), dt_out);
  const double T = protocol.scaled_duration();
  const int count = protocol.scaled_realizations();
  const auto probes = default_probe_locations(grid, protocol.probes);

  struct Partial {
    std::vector<CrestRecord> records;
    MomentAccumulator moments;
  };
  std::vector<Partial> parts(count);
  parallel_for(
      parts.size(),
      [&](std::size_t i) {
        const Realization r = draw_realization(S, grid, protocol.base_seed + i);
        for (const auto& p : simulate_probes(r, protocol.backend, params, T, dt, dt_out, probes)) {
          parts[i].moments.add(p.eta);
          parts[i].records.push_back(zero_crossing_crests(p.eta));
        }
      },
      protocol.workers ? protocol.workers : default_workers());

  std::vector<CrestRecord> records;
  MomentAccumulator moments;
  for (auto& p : parts) {
    moments.merge(p.moments);
    for (auto& r : p.records) records.push_back(std::move(r));
  }
  return summarize(S.id(), records, moments, S.energy(), protocol.spectral_threshold);
}

}  // namespace alber
