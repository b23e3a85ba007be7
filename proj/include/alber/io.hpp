#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "alber/crossing.hpp"
#include "alber/montecarlo.hpp"
#include "alber/spectra.hpp"
#include "alber/stability.hpp"

namespace alber {

namespace fs = std::filesystem;
using Warn = std::function<void(const std::string&)>;

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);
// Strict full-string parse; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view s);

void write_text(const fs::path& path, const std::string& text);
std::string read_text(const fs::path& path);

// Spectrum CSV:
//   # kind=<wavenumber|frequency> k0=<value|auto> id=<string> [units=<rad|hz>]
//   abscissa,density
// Lines starting with '#' after the header are comments. Wavenumbers are in
// rad/m with S in m^3. Frequencies default to rad/s with E in m^2 s; with
// units=hz the file holds f in Hz and E(f) in m^2/Hz.
struct SpectrumFile {
  std::string kind = "wavenumber";
  std::optional<double> k0;  // nullopt for k0=auto
  std::string units = "rad";
  std::string id;
  std::vector<double> x;
  std::vector<double> y;
};

using ParsedSpectrum = std::variant<DiscreteSpectrum, FrequencySpectrum>;

SpectrumFile read_spectrum_text(const std::string& text, const std::string& source = "<input>");
SpectrumFile read_spectrum_file(const fs::path& path);
ParsedSpectrum to_spectrum(const SpectrumFile& file);
ParsedSpectrum parse_spectrum(const fs::path& path);
// Frequency spectra go through frequency_to_wavenumber; k0=auto resolves to
// the peak for either kind.
DiscreteSpectrum as_wavenumber(const ParsedSpectrum& spectrum);

std::string emit_spectrum(const SpectrumFile& file);
std::string emit_spectrum(const DiscreteSpectrum& spectrum);
std::string emit_spectrum(const FrequencySpectrum& spectrum);

nlohmann::json to_json(const SpectralSummary& s);
nlohmann::json to_json(const StabilityReport& r);
nlohmann::json to_json(const CrossingReport& r);
nlohmann::json to_json(const SeaStateStats& s);
nlohmann::json to_json(const MonteCarloProtocol& p);
nlohmann::json to_json(const CurveScanPlan& p);

// Columns t, re, im. The origin at t = inf is written as t=inf.
std::string curve_csv(const GammaCurve& curve);

struct SummaryRow {
  std::string id;
  std::string file;
  double k0 = 0.0;
  SpectralSummary summary;
  bool stable = true;
  double pti = 0.0;
  bool complete = true;
  bool failed = false;  // no analysis result at all
  std::string error;
};

struct BatchConfig {
  CurveScanPlan plan{};
  K0Policy k0_policy = K0Policy::provided;
  std::optional<fs::path> report_dir;  // per-spectrum JSON reports
  unsigned workers = 0;
};

// Every *.csv in dir is analyzed; rows are sorted by id (then file name).
std::vector<SummaryRow> batch_analyze(const fs::path& dir, const BatchConfig& config,
                                      const Warn& warn = {});
SummaryRow analyze_spectrum(const ParsedSpectrum& spectrum, const BatchConfig& config,
                            StabilityReport* report = nullptr);

// id,m0,Hs,eps,BFI,stable,PTI,error
std::string summary_csv(const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> parse_summary_csv(const std::string& text);

// id,Hs,Hs_spectral,threshold,kurtosis,p_rogue,p_rogue_spectral,crests,exceedances,waves,
// samples,records
std::string stats_csv(const std::vector<SeaStateStats>& rows);
std::vector<SeaStateStats> parse_stats_csv(const std::string& text);

struct Correlation {
  std::string y;  // BFI, eps, kurtosis or p_rogue
  double rho = 0.0;
  std::size_t n = 0;
};

struct CorrelationTable {
  std::vector<std::string> ids;  // joined ids, sorted
  std::vector<double> pti;
  std::vector<double> bfi, steepness, kurtosis, p_rogue;
  std::vector<Correlation> rho;
};

// Inner join on id; failed summary rows are skipped. Throws InputError when no
// id is shared.
CorrelationTable correlate(const std::vector<SummaryRow>& summary,
                           const std::vector<SeaStateStats>& stats);
std::string correlation_csv(const CorrelationTable& t);
// scatter_<name>.csv with columns id,PTI,<name>; returns the paths written.
std::vector<fs::path> write_scatter_csvs(const CorrelationTable& t, const fs::path& out_dir);

struct PlotInput {
  enum class Kind { curve, scatter };
  Kind kind = Kind::curve;
  fs::path csv;
};

// One matplotlib script per input, next to nothing but the CSV it reads.
// Curve plots mark (1/4pi, 0) in red; the BFI scatter uses log-log axes.
std::vector<fs::path> emit_plot_script(const std::vector<PlotInput>& inputs,
                                       const fs::path& out_dir, const Warn& warn = {});

struct JonswapParams {
  double fp = 0.1;           // peak frequency, Hz
  double alpha = 0.0081;     // Phillips constant
  double gamma = 3.3;        // peak enhancement
  double sigma_a = 0.07;
  double sigma_b = 0.09;
  double gravity = kStandardGravity;
};

// E(f) in m^2/Hz.
double jonswap_density(const JonswapParams& p, double f);
// 36 frequencies f_i = 0.0345 * 1.1^i Hz.
std::vector<double> wam_frequencies(int count = 36);
FrequencySpectrum jonswap_spectrum(const JonswapParams& p, const std::string& id,
                                   int count = 36);

struct JonswapFamily {
  // Steepness is controlled through alpha, bandwidth through gamma.
  double alpha_min = 0.004, alpha_max = 0.016;
  double gamma_min = 1.0, gamma_max = 7.0;
  double fp = 0.1;
  // grid: alpha x gamma lattice (n must be a product of two counts with
  // alpha_steps > 0); path: both parameters rise together along a line.
  enum class Layout { grid, path };
  Layout layout = Layout::grid;
  int alpha_steps = 0;  // grid only; 0 picks the squarest factorization
  void validate() const;
};

std::vector<std::pair<std::string, JonswapParams>> jonswap_family(const JonswapFamily& f, int n);
// Files jonswap_<nn>.csv in Hz units with k0=auto.
std::vector<fs::path> generate_jonswap_family(const JonswapFamily& f, int n,
                                              const fs::path& out_dir);

// Crossing configuration:
// {
//   "A": {"alpha":..,"beta":..,"gamma":..,"xi":..,"zeta":..,"C":[cx,cy],"carrier":[kx,ky]},
//   "B": {...}, "gravity": 9.81,
//   "background_A": {"type":"zero"} | {"type":"gaussian","mass":..,"center":[..],"sigma":[..]}
//                 | {"type":"tabulated","x":[..],"y":[..],"values":[..]}
//                 | {"type":"sum","parts":[...]},
//   "background_B": {...},
//   "P": [[px,py],...] | {"radii":[..],"angles":n},
//   "contour": {"delta":..,"tail_tol":..,...}
// }
struct CrossingConfig {
  CoupledNlsCoefficients coefficients;
  HomogeneousBackground2D background_A;
  HomogeneousBackground2D background_B;
  std::vector<Vec2> P;
  ContourParams contour{};
};

CrossingConfig parse_crossing_config(const nlohmann::json& j);

}  // namespace alber
