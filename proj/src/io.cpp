#include "alber/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "alber/error.hpp"
#include "alber/parallel.hpp"
#include "alber/wave_stats.hpp"

namespace alber {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

// Row fields split on commas, or on whitespace when there is no comma.
std::vector<std::string> row_fields(const std::string& line) {
  if (line.find(',') != std::string::npos) {
    auto f = split(line, ',');
    for (auto& x : f) x = trim(x);
    return f;
  }
  std::vector<std::string> f;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) f.push_back(tok);
  return f;
}

std::string csv_safe(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

double midpoint_k0(const std::vector<double>& x) { return 0.5 * (x.front() + x.back()); }

bool all_zero(const std::vector<double>& y) {
  return std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; });
}

}  // namespace

SpectrumFile read_spectrum_text(const std::string& text, const std::string& source) {
  const auto lines = lines_of(text);
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw InputError(source + ": empty spectrum file");
  const std::string header = trim(lines[i]);
  if (header.empty() || header[0] != '#') {
    throw InputError(source + ":" + std::to_string(i + 1) +
                     ": expected header '# kind=<wavenumber|frequency> k0=<value|auto> id=<string>'");
  }
  SpectrumFile f;
  bool have_kind = false;
  bool have_k0 = false;
  std::istringstream hs(header.substr(1));
  std::string tok;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      throw InputError(source + ":" + std::to_string(i + 1) + ": malformed header field '" + tok + "'");
    }
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "kind") {
      if (val != "wavenumber" && val != "frequency") {
        throw InputError(source + ": kind must be wavenumber or frequency, got '" + val + "'");
      }
      f.kind = val;
      have_kind = true;
    } else if (key == "k0") {
      have_k0 = true;
      if (val != "auto") {
        const auto v = parse_double(val);
        if (!v || !(*v > 0.0) || !std::isfinite(*v)) {
          throw InputError(source + ": k0 must be a positive number or auto, got '" + val + "'");
        }
        f.k0 = *v;
      }
    } else if (key == "id") {
      if (val.find(',') != std::string::npos) throw InputError(source + ": id must not contain ','");
      f.id = val;
    } else if (key == "units") {
      if (val != "rad" && val != "hz") {
        throw InputError(source + ": units must be rad or hz, got '" + val + "'");
      }
      f.units = val;
    } else {
      throw InputError(source + ": unknown header field '" + key + "'");
    }
  }
  if (!have_kind) throw InputError(source + ": header is missing kind=");
  if (!have_k0) throw InputError(source + ": header is missing k0=");
  if (f.kind == "wavenumber" && f.units != "rad") {
    throw InputError(source + ": wavenumber spectra use units=rad");
  }
  for (++i; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    const auto fields = row_fields(line);
    const std::string where = source + ":" + std::to_string(i + 1);
    if (fields.size() != 2) {
      throw InputError(where + ": expected 2 columns, got " + std::to_string(fields.size()));
    }
    const auto x = parse_double(fields[0]);
    const auto y = parse_double(fields[1]);
    if (!x || !y) throw InputError(where + ": non-numeric value in '" + line + "'");
    if (!std::isfinite(*x) || !std::isfinite(*y)) throw InputError(where + ": non-finite value");
    if (!f.x.empty() && !(*x > f.x.back())) {
      throw InputError(where + ": abscissae must be strictly increasing");
    }
    f.x.push_back(*x);
    f.y.push_back(*y);
  }
  if (f.x.empty()) throw InputError(source + ": no data rows");
  return f;
}

SpectrumFile read_spectrum_file(const fs::path& path) {
  auto f = read_spectrum_text(read_text(path), path.string());
  if (f.id.empty()) f.id = path.stem().string();
  return f;
}

ParsedSpectrum to_spectrum(const SpectrumFile& f) {
  if (f.kind == "wavenumber") {
    double k0 = 0.0;
    if (f.k0) {
      k0 = *f.k0;
    } else {
      k0 = all_zero(f.y) ? midpoint_k0(f.x) : select_k0(f.x, f.y, K0Policy::peak);
    }
    return DiscreteSpectrum(f.x, f.y, k0, f.id);
  }
  std::vector<double> omega(f.x), energy(f.y);
  if (f.units == "hz") {
    const double tp = 2.0 * std::numbers::pi;
    for (auto& w : omega) w *= tp;
    for (auto& e : energy) e /= tp;
  }
  return FrequencySpectrum(std::move(omega), std::move(energy), kStandardGravity, f.id, f.k0);
}

ParsedSpectrum parse_spectrum(const fs::path& path) { return to_spectrum(read_spectrum_file(path)); }

DiscreteSpectrum as_wavenumber(const ParsedSpectrum& s) {
  if (const auto* d = std::get_if<DiscreteSpectrum>(&s)) return *d;
  return frequency_to_wavenumber(std::get<FrequencySpectrum>(s));
}

std::string emit_spectrum(const SpectrumFile& f) {
  std::string out = "# kind=" + f.kind + " k0=" + (f.k0 ? format_double(*f.k0) : "auto");
  if (!f.id.empty()) out += " id=" + f.id;
  if (f.units != "rad") out += " units=" + f.units;
  out += "\n";
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    out += format_double(f.x[i]) + "," + format_double(f.y[i]) + "\n";
  }
  return out;
}

std::string emit_spectrum(const DiscreteSpectrum& s) {
  SpectrumFile f;
  f.kind = "wavenumber";
  f.k0 = s.k0();
  f.id = s.id();
  f.x.assign(s.wavenumbers().begin(), s.wavenumbers().end());
  f.y.assign(s.densities().begin(), s.densities().end());
  return emit_spectrum(f);
}

std::string emit_spectrum(const FrequencySpectrum& s) {
  SpectrumFile f;
  f.kind = "frequency";
  f.k0 = s.k0();
  f.id = s.id();
  f.x.assign(s.omega().begin(), s.omega().end());
  f.y.assign(s.energy().begin(), s.energy().end());
  return emit_spectrum(f);
}

json to_json(const SpectralSummary& s) {
  return {{"m0", s.m0},       {"Hs", s.hs},   {"Qp", s.qp}, {"delta_omega", s.delta_omega},
          {"eps", s.steepness}, {"BFI", s.bfi}};
}

json to_json(const StabilityReport& r) {
  json per = json::array();
  for (const auto& d : r.per_x) {
    per.push_back({{"X", d.X},
                   {"max_crossing", d.max_crossing},
                   {"diameter", d.diameter},
                   {"distance", d.distance},
                   {"max_error", d.max_error},
                   {"fast_excluded", d.fast_excluded},
                   {"curve_built", d.curve_built},
                   {"contains", d.contains}});
  }
  return {{"stable", r.stable},
          {"pti", r.pti},
          {"distance", r.distance},
          {"unstable_wavenumbers", r.unstable_wavenumbers},
          {"complete", r.complete},
          {"failure", r.failure},
          {"per_x", per}};
}

json to_json(const CrossingReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    w.push_back({{"P", {x.P.x, x.P.y}},
                 {"omega", {x.omega.real(), x.omega.imag()}},
                 {"F", {x.F.real(), x.F.imag()}},
                 {"zero", x.zero}});
  }
  json per = json::array();
  for (const auto& d : r.per_P) {
    per.push_back({{"P", {d.P.x, d.P.y}},
                   {"winding", d.winding},
                   {"min_abs", d.min_abs},
                   {"tail_deviation", d.tail_deviation},
                   {"omega_max", d.omega_max},
                   {"samples", d.samples}});
  }
  return {{"kappa_min", r.kappa_min},     {"bounded", r.bounded},
          {"sup_h", r.sup_h},             {"unstable", r.unstable},
          {"resolution_limited", r.resolution_limited},
          {"witnesses", w},               {"per_P", per}};
}

json to_json(const SeaStateStats& s) {
  return {{"id", s.id},
          {"Hs", s.hs_timeseries},
          {"Hs_spectral", s.hs_spectral},
          {"threshold", s.threshold},
          {"kurtosis", s.excess_kurtosis},
          {"p_rogue", s.p_rogue},
          {"p_rogue_timeseries", s.p_rogue_timeseries},
          {"p_rogue_spectral", s.p_rogue_spectral},
          {"variance", s.variance},
          {"crests", s.crests},
          {"exceedances", s.exceedances},
          {"waves", s.waves},
          {"samples", s.samples},
          {"records", s.records}};
}

json to_json(const MonteCarloProtocol& p) {
  return {{"realizations", p.scaled_realizations()},
          {"duration", p.scaled_duration()},
          {"probes", p.probes},
          {"dt_out", p.dt_out},
          {"dt", p.dt},
          {"backend", to_string(p.backend)},
          {"base_seed", p.base_seed},
          {"scale", p.scale},
          {"n", p.n},
          {"k_max_factor", p.k_max_factor},
          {"spectral_threshold", p.spectral_threshold}};
}

json to_json(const CurveScanPlan& p) {
  return {{"X_values", p.X_values},
          {"dilation", p.dilation},
          {"base_points", p.base_points},
          {"refine_passes", p.refine_passes},
          {"chord_tol", p.chord_tol},
          {"max_points", p.max_points},
          {"eta", p.quad.eta},
          {"rel_tol", p.quad.rel_tol},
          {"abs_tol", p.quad.abs_tol},
          {"initial_panels", p.quad.initial_panels},
          {"max_levels", p.quad.max_levels},
          {"reference_only", p.reference_only},
          {"reference_X", p.reference_X}};
}

std::string curve_csv(const GammaCurve& c) {
  std::string out = "t,re,im\n";
  for (const auto& p : c.points) {
    out += format_double(p.t) + "," + format_double(p.z.real()) + "," + format_double(p.z.imag()) +
           "\n";
  }
  return out;
}

SummaryRow analyze_spectrum(const ParsedSpectrum& spectrum, const BatchConfig& config,
                            StabilityReport* report) {
  DiscreteSpectrum ds = as_wavenumber(spectrum);
  if (config.k0_policy != K0Policy::provided) ds = ds.with_k0(select_k0(ds, config.k0_policy));
  SummaryRow row;
  row.id = ds.id();
  row.k0 = ds.k0();
  if (const auto* f = std::get_if<FrequencySpectrum>(&spectrum)) {
    row.summary = spectral_summary(*f, ds.k0());
  } else {
    row.summary = spectral_summary(ds);
  }
  const StabilityReport r = classify(rescale(ds), config.plan);
  row.stable = r.stable;
  row.pti = r.pti;
  row.complete = r.complete;
  if (!r.complete) row.error = "incomplete: " + r.failure;
  if (report) *report = r;
  return row;
}

std::vector<SummaryRow> batch_analyze(const fs::path& dir, const BatchConfig& config,
                                      const Warn& warn) {
  if (!fs::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  const unsigned workers = config.workers ? config.workers : default_workers();
  BatchConfig inner = config;
  if (workers > 1) inner.plan.workers = 1;

  std::vector<SummaryRow> rows(files.size());
  parallel_for(
      files.size(),
      [&](std::size_t i) {
        SummaryRow& row = rows[i];
        row.file = files[i].filename().string();
        row.id = files[i].stem().string();
        try {
          const auto f = read_spectrum_file(files[i]);
          row.id = f.id;
          StabilityReport r;
          const std::string file = row.file;
          row = analyze_spectrum(to_spectrum(f), inner, &r);
          row.file = file;
          if (config.report_dir) {
            json j = to_json(r);
            j["id"] = row.id;
            j["k0"] = row.k0;
            j["summary"] = to_json(row.summary);
            write_text(*config.report_dir / (row.id + ".json"), j.dump(2) + "\n");
          }
        } catch (const std::exception& e) {
          row.error = e.what();
          row.complete = false;
          row.failed = true;
        }
      },
      workers);

  std::sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
    return a.id != b.id ? a.id < b.id : a.file < b.file;
  });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].id == rows[i - 1].id && warn) warn("duplicate spectrum id '" + rows[i].id + "'");
  }
  for (const auto& r : rows) {
    if (!r.error.empty() && warn) warn(r.file + ": " + r.error);
  }
  return rows;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "id,m0,Hs,eps,BFI,stable,PTI,error\n";
  for (const auto& r : rows) {
    if (r.failed) {
      out += csv_safe(r.id) + ",,,,,,," + csv_safe(r.error) + "\n";
      continue;
    }
    out += csv_safe(r.id) + "," + format_double(r.summary.m0) + "," + format_double(r.summary.hs) +
           "," + format_double(r.summary.steepness) + "," + format_double(r.summary.bfi) + "," +
           (r.stable ? "true" : "false") + "," + format_double(r.pti) + "," + csv_safe(r.error) +
           "\n";
  }
  return out;
}

namespace {

double field_double(const std::string& s, const std::string& where) {
  const auto v = parse_double(s);
  if (!v) throw InputError(where + ": non-numeric value '" + s + "'");
  return *v;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text, const std::string& header,
                                               const std::string& what) {
  const auto lines = lines_of(text);
  std::vector<std::vector<std::string>> out;
  bool seen_header = false;
  const std::size_t cols = split(header, ',').size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    if (!seen_header) {
      if (trim(lines[i]) != header) {
        throw InputError(what + ": expected header '" + header + "'");
      }
      seen_header = true;
      continue;
    }
    auto f = split(lines[i], ',');
    if (f.size() != cols) {
      throw InputError(what + ":" + std::to_string(i + 1) + ": expected " + std::to_string(cols) +
                       " columns");
    }
    f.push_back(std::to_string(i + 1));
    out.push_back(std::move(f));
  }
  if (!seen_header) throw InputError(what + ": missing header");
  return out;
}

}  // namespace

std::vector<SummaryRow> parse_summary_csv(const std::string& text) {
  std::vector<SummaryRow> rows;
  for (const auto& f : csv_rows(text, "id,m0,Hs,eps,BFI,stable,PTI,error", "summary csv")) {
    const std::string where = "summary csv:" + f[8];
    SummaryRow r;
    r.id = f[0];
    r.error = f[7];
    if (f[1].empty()) {
      r.complete = false;
      r.failed = true;
      if (r.error.empty()) r.error = "missing values";
      rows.push_back(r);
      continue;
    }
    r.summary.m0 = field_double(f[1], where);
    r.summary.hs = field_double(f[2], where);
    r.summary.steepness = field_double(f[3], where);
    r.summary.bfi = field_double(f[4], where);
    if (f[5] != "true" && f[5] != "false") throw InputError(where + ": stable must be true|false");
    r.stable = f[5] == "true";
    r.pti = field_double(f[6], where);
    r.complete = r.error.empty();
    rows.push_back(r);
  }
  return rows;
}

namespace {
const char* kStatsHeader =
    "id,Hs,Hs_spectral,threshold,kurtosis,p_rogue,p_rogue_spectral,crests,exceedances,waves,"
    "samples,records";
}

std::string stats_csv(const std::vector<SeaStateStats>& rows) {
  std::string out = std::string(kStatsHeader) + "\n";
  for (const auto& s : rows) {
    out += csv_safe(s.id) + "," + format_double(s.hs_timeseries) + "," +
           format_double(s.hs_spectral) + "," + format_double(s.threshold) + "," +
           format_double(s.excess_kurtosis) + "," + format_double(s.p_rogue) + "," +
           format_double(s.p_rogue_spectral) + "," + std::to_string(s.crests) + "," +
           std::to_string(s.exceedances) + "," + std::to_string(s.waves) + "," +
           std::to_string(s.samples) + "," + std::to_string(s.records) + "\n";
  }
  return out;
}

std::vector<SeaStateStats> parse_stats_csv(const std::string& text) {
  std::vector<SeaStateStats> rows;
  for (const auto& f : csv_rows(text, kStatsHeader, "stats csv")) {
    const std::string where = "stats csv:" + f[12];
    SeaStateStats s;
    s.id = f[0];
    s.hs_timeseries = field_double(f[1], where);
    s.hs_spectral = field_double(f[2], where);
    s.threshold = field_double(f[3], where);
    s.excess_kurtosis = field_double(f[4], where);
    s.p_rogue = field_double(f[5], where);
    s.p_rogue_spectral = field_double(f[6], where);
    s.crests = static_cast<std::uint64_t>(field_double(f[7], where));
    s.exceedances = static_cast<std::uint64_t>(field_double(f[8], where));
    s.waves = static_cast<std::uint64_t>(field_double(f[9], where));
    s.samples = static_cast<std::uint64_t>(field_double(f[10], where));
    s.records = static_cast<std::uint64_t>(field_double(f[11], where));
    rows.push_back(s);
  }
  return rows;
}

CorrelationTable correlate(const std::vector<SummaryRow>& summary,
                           const std::vector<SeaStateStats>& stats) {
  std::map<std::string, const SummaryRow*> by_id;
  for (const auto& r : summary) {
    if (r.error.empty()) by_id[r.id] = &r;
  }
  std::map<std::string, const SeaStateStats*> st;
  for (const auto& s : stats) st[s.id] = &s;
  CorrelationTable t;
  for (const auto& [id, r] : by_id) {
    const auto it = st.find(id);
    if (it == st.end()) continue;
    t.ids.push_back(id);
    t.pti.push_back(r->pti);
    t.bfi.push_back(r->summary.bfi);
    t.steepness.push_back(r->summary.steepness);
    t.kurtosis.push_back(it->second->excess_kurtosis);
    t.p_rogue.push_back(it->second->p_rogue);
  }
  if (t.ids.empty()) throw InputError("correlate: summary and stats share no spectrum id");
  const auto rho = [&](const std::string& name, const std::vector<double>& y) {
    Correlation c{name, std::numeric_limits<double>::quiet_NaN(), t.ids.size()};
    try {
      c.rho = spearman_rank(t.pti, y);
    } catch (const InputError&) {
      // fewer than 3 rows or a constant column: rank correlation undefined
    }
    t.rho.push_back(c);
  };
  rho("BFI", t.bfi);
  rho("eps", t.steepness);
  rho("kurtosis", t.kurtosis);
  rho("p_rogue", t.p_rogue);
  return t;
}

std::string correlation_csv(const CorrelationTable& t) {
  std::string out = "pair,rho,n\n";
  for (const auto& c : t.rho) {
    out += "PTI:" + c.y + "," + format_double(c.rho) + "," + std::to_string(c.n) + "\n";
  }
  return out;
}

std::vector<fs::path> write_scatter_csvs(const CorrelationTable& t, const fs::path& out_dir) {
  std::vector<fs::path> out;
  const std::vector<std::pair<std::string, const std::vector<double>*>> cols = {
      {"BFI", &t.bfi}, {"eps", &t.steepness}, {"kurtosis", &t.kurtosis}, {"p_rogue", &t.p_rogue}};
  for (const auto& [name, v] : cols) {
    std::string text = "id,PTI," + name + "\n";
    for (std::size_t i = 0; i < t.ids.size(); ++i) {
      text += t.ids[i] + "," + format_double(t.pti[i]) + "," + format_double((*v)[i]) + "\n";
    }
    const fs::path p = out_dir / ("scatter_" + name + ".csv");
    write_text(p, text);
    out.push_back(p);
  }
  return out;
}

namespace {

std::string py_string(const std::string& s) {
  std::string out = "r'";
  for (char c : s) out += c == '\'' ? std::string("\\'") : std::string(1, c);
  return out + "'";
}

std::string curve_script(const std::string& csv, const std::string& png) {
  return "import numpy as np\n"
         "import matplotlib\n"
         "matplotlib.use('Agg')\n"
         "import matplotlib.pyplot as plt\n"
         "import os\n\n"
         "here = os.path.dirname(os.path.abspath(__file__))\n"
         "d = np.genfromtxt(os.path.join(here, " + csv + "), delimiter=',', names=True)\n"
         "re = np.append(d['re'], d['re'][0])\n"
         "im = np.append(d['im'], d['im'][0])\n"
         "fig, ax = plt.subplots(figsize=(6, 5))\n"
         "ax.plot(re, im, '-', lw=1.0, label='curve')\n"
         "ax.plot([1.0 / (4.0 * np.pi)], [0.0], 'o', color='red', label='1/(4 pi)')\n"
         "ax.set_xlabel('Re')\n"
         "ax.set_ylabel('Im')\n"
         "ax.axhline(0.0, color='grey', lw=0.5)\n"
         "ax.axvline(0.0, color='grey', lw=0.5)\n"
         "ax.legend()\n"
         "fig.tight_layout()\n"
         "fig.savefig(os.path.join(here, " + png + "), dpi=150)\n";
}

std::string scatter_script(const std::string& csv, const std::string& png, bool loglog) {
  return "import numpy as np\n"
         "import matplotlib\n"
         "matplotlib.use('Agg')\n"
         "import matplotlib.pyplot as plt\n"
         "import os\n\n"
         "here = os.path.dirname(os.path.abspath(__file__))\n"
         "d = np.genfromtxt(os.path.join(here, " + csv + "), delimiter=',', names=True, dtype=None, encoding='utf-8')\n"
         "names = d.dtype.names\n"
         "x = np.atleast_1d(d[names[1]]).astype(float)\n"
         "y = np.atleast_1d(d[names[2]]).astype(float)\n"
         "fig, ax = plt.subplots(figsize=(6, 5))\n"
         "ax.plot(x, y, 'o')\n" +
         std::string(loglog ? "ax.set_xscale('log')\nax.set_yscale('log')\n" : "") +
         "ax.set_xlabel(names[1])\n"
         "ax.set_ylabel(names[2])\n"
         "fig.tight_layout()\n"
         "fig.savefig(os.path.join(here, " + png + "), dpi=150)\n";
}

}  // namespace

std::vector<fs::path> emit_plot_script(const std::vector<PlotInput>& inputs,
                                       const fs::path& out_dir, const Warn& warn) {
  std::vector<fs::path> out;
  if (inputs.empty()) {
    if (warn) warn("no plot inputs; no scripts written");
    return out;
  }
  fs::create_directories(out_dir);
  for (const auto& in : inputs) {
    if (!fs::exists(in.csv)) throw InputError("plot input " + in.csv.string() + " does not exist");
    const std::string stem = in.csv.stem().string();
    const fs::path script = out_dir / ("plot_" + stem + ".py");
    const std::string rel = fs::relative(fs::absolute(in.csv), fs::absolute(out_dir)).string();
    const std::string csv = py_string(rel);
    const std::string png = py_string(stem + ".png");
    std::string text;
    if (in.kind == PlotInput::Kind::curve) {
      text = curve_script(csv, png);
    } else {
      const bool loglog = stem.find("BFI") != std::string::npos;
      text = scatter_script(csv, png, loglog);
    }
    write_text(script, text);
    out.push_back(script);
  }
  return out;
}

double jonswap_density(const JonswapParams& p, double f) {
  if (!(f > 0.0)) return 0.0;
  const double tp = 2.0 * std::numbers::pi;
  const double sigma = f <= p.fp ? p.sigma_a : p.sigma_b;
  const double r = std::exp(-(f - p.fp) * (f - p.fp) / (2.0 * sigma * sigma * p.fp * p.fp));
  const double ratio = p.fp / f;
  return p.alpha * p.gravity * p.gravity / std::pow(tp, 4) * std::pow(f, -5.0) *
         std::exp(-1.25 * ratio * ratio * ratio * ratio) * std::pow(p.gamma, r);
}

std::vector<double> wam_frequencies(int count) {
  if (count < 4) throw InputError("wam frequencies: need at least 4");
  std::vector<double> f(count);
  for (int i = 0; i < count; ++i) f[i] = 0.0345 * std::pow(1.1, i);
  return f;
}

FrequencySpectrum jonswap_spectrum(const JonswapParams& p, const std::string& id, int count) {
  const double tp = 2.0 * std::numbers::pi;
  std::vector<double> omega, energy;
  for (double f : wam_frequencies(count)) {
    omega.push_back(tp * f);
    energy.push_back(jonswap_density(p, f) / tp);
  }
  return FrequencySpectrum(std::move(omega), std::move(energy), p.gravity, id);
}

void JonswapFamily::validate() const {
  if (!(alpha_min > 0.0) || !(alpha_max >= alpha_min)) {
    throw InputError("jonswap family: need 0 < alpha_min <= alpha_max");
  }
  if (!(gamma_min >= 1.0) || !(gamma_max >= gamma_min)) {
    throw InputError("jonswap family: need 1 <= gamma_min <= gamma_max");
  }
  const auto f = wam_frequencies(36);
  if (!(fp > f.front()) || !(fp < f.back())) {
    throw InputError("jonswap family: peak frequency must lie inside the frequency grid");
  }
  if (alpha_steps < 0) throw InputError("jonswap family: alpha_steps must be >= 0");
}

std::vector<std::pair<std::string, JonswapParams>> jonswap_family(const JonswapFamily& fam, int n) {
  fam.validate();
  if (n < 1) throw InputError("jonswap family: n must be >= 1");
  const auto lerp = [](double a, double b, double t) { return a + (b - a) * t; };
  std::vector<std::pair<std::string, JonswapParams>> out;
  const int width = n >= 100 ? 3 : 2;
  const auto name = [&](int i) {
    std::string s = std::to_string(i);
    while (static_cast<int>(s.size()) < width) s = "0" + s;
    return "jonswap_" + s;
  };
  if (fam.layout == JonswapFamily::Layout::path) {
    for (int i = 0; i < n; ++i) {
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
      JonswapParams p;
      p.fp = fam.fp;
      p.alpha = lerp(fam.alpha_min, fam.alpha_max, t);
      p.gamma = lerp(fam.gamma_min, fam.gamma_max, t);
      out.emplace_back(name(i), p);
    }
    return out;
  }
  int na = fam.alpha_steps;
  if (na == 0) {
    na = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (n % na != 0) --na;
  }
  if (n % na != 0) throw InputError("jonswap family: n must be a multiple of alpha_steps");
  const int ng = n / na;
  for (int a = 0; a < na; ++a) {
    for (int g = 0; g < ng; ++g) {
      JonswapParams p;
      p.fp = fam.fp;
      p.alpha = lerp(fam.alpha_min, fam.alpha_max, na == 1 ? 0.0 : static_cast<double>(a) / (na - 1));
      p.gamma = lerp(fam.gamma_min, fam.gamma_max, ng == 1 ? 0.0 : static_cast<double>(g) / (ng - 1));
      out.emplace_back(name(a * ng + g), p);
    }
  }
  return out;
}

std::vector<fs::path> generate_jonswap_family(const JonswapFamily& fam, int n,
                                              const fs::path& out_dir) {
  std::vector<fs::path> out;
  for (const auto& [id, p] : jonswap_family(fam, n)) {
    SpectrumFile f;
    f.kind = "frequency";
    f.units = "hz";
    f.id = id;
    f.x = wam_frequencies(36);
    for (double x : f.x) f.y.push_back(jonswap_density(p, x));
    const fs::path path = out_dir / (id + ".csv");
    write_text(path, emit_spectrum(f));
    out.push_back(path);
  }
  return out;
}

namespace {

Vec2 vec2(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw InputError(what + " must be a 2-element array");
  return {j[0].get<double>(), j[1].get<double>()};
}

WavetrainCoefficients wavetrain(const json& j) {
  WavetrainCoefficients w;
  w.alpha = j.at("alpha").get<double>();
  w.beta = j.at("beta").get<double>();
  w.gamma = j.value("gamma", 0.0);
  w.xi = j.at("xi").get<double>();
  w.zeta = j.value("zeta", 0.0);
  if (j.contains("C")) w.C = vec2(j["C"], "C");
  if (j.contains("carrier")) w.carrier = vec2(j["carrier"], "carrier");
  return w;
}

HomogeneousBackground2D background(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "zero") return HomogeneousBackground2D::zero();
  if (type == "gaussian") {
    const Vec2 c = vec2(j.at("center"), "center");
    const Vec2 s = vec2(j.at("sigma"), "sigma");
    return HomogeneousBackground2D::gaussian(j.at("mass").get<double>(), c, s.x, s.y);
  }
  if (type == "tabulated") {
    return HomogeneousBackground2D::tabulated(j.at("x").get<std::vector<double>>(),
                                              j.at("y").get<std::vector<double>>(),
                                              j.at("values").get<std::vector<double>>());
  }
  if (type == "sum") {
    std::vector<HomogeneousBackground2D> parts;
    for (const auto& p : j.at("parts")) parts.push_back(background(p));
    return HomogeneousBackground2D::sum(parts);
  }
  throw InputError("unknown background type '" + type + "'");
}

}  // namespace

CrossingConfig parse_crossing_config(const json& j) {
  try {
    CrossingConfig c;
    c.coefficients.A = wavetrain(j.at("A"));
    c.coefficients.B = wavetrain(j.at("B"));
    c.coefficients.gravity = j.value("gravity", kStandardGravity);
    c.background_A = j.contains("background_A") ? background(j["background_A"])
                                                : HomogeneousBackground2D::zero();
    c.background_B = j.contains("background_B") ? background(j["background_B"])
                                                : HomogeneousBackground2D::zero();
    const json& P = j.at("P");
    if (P.is_array()) {
      for (const auto& p : P) c.P.push_back(vec2(p, "P entry"));
    } else {
      c.P = polar_grid(P.at("radii").get<std::vector<double>>(), P.at("angles").get<int>());
    }
    if (c.P.empty()) throw InputError("crossing config: P grid is empty");
    if (j.contains("contour")) {
      const json& k = j["contour"];
      auto& p = c.contour;
      p.delta = k.value("delta", p.delta);
      p.omega_dilation = k.value("omega_dilation", p.omega_dilation);
      p.base_points = k.value("base_points", p.base_points);
      p.refine_passes = k.value("refine_passes", p.refine_passes);
      p.max_arg_step = k.value("max_arg_step", p.max_arg_step);
      p.max_points = k.value("max_points", p.max_points);
      p.tail_tol = k.value("tail_tol", p.tail_tol);
      p.max_extensions = k.value("max_extensions", p.max_extensions);
      p.bound_limit = k.value("bound_limit", p.bound_limit);
      p.locate_zeros = k.value("locate_zeros", p.locate_zeros);
      p.transfer.quad.eta = k.value("eta", p.transfer.quad.eta);
      p.transfer.quad.rel_tol = k.value("rel_tol", p.transfer.quad.rel_tol);
      p.transfer.quad.abs_tol = k.value("abs_tol", p.transfer.quad.abs_tol);
      p.transfer.marginal_points = k.value("marginal_points", p.transfer.marginal_points);
    }
    if (!(c.contour.delta > 0.0)) throw InputError("crossing config: delta must be > 0");
    if (!(c.contour.tail_tol > 0.0)) throw InputError("crossing config: tail_tol must be > 0");
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("crossing config: ") + e.what());
  }
}

}  // namespace alber
