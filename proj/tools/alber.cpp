#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alber/error.hpp"
#include "alber/io.hpp"
#include "alber/montecarlo.hpp"
#include "alber/stability.hpp"

using namespace alber;

namespace {

void warn(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

void add_quadrature_flags(CLI::App* app, QuadratureParams& q) {
  app->add_option("--eta", q.eta, "Distance of the integration point from the real axis");
  app->add_option("--rel-tol", q.rel_tol, "Relative tolerance of the singular integrals");
  app->add_option("--abs-tol", q.abs_tol, "Absolute tolerance floor");
  app->add_option("--initial-panels", q.initial_panels, "Uniform panels before refinement");
  app->add_option("--max-levels", q.max_levels, "Panel refinement levels");
}

void add_plan_flags(CLI::App* app, CurveScanPlan& plan) {
  add_quadrature_flags(app, plan.quad);
  app->add_option("--x-values", plan.X_values, "Divided-difference steps X")->delimiter(',');
  app->add_option("--dilation", plan.dilation, "t-range widening per side, fraction of width");
  app->add_option("--base-points", plan.base_points, "Uniform t samples per curve");
  app->add_option("--refine-passes", plan.refine_passes, "Chord refinement passes");
  app->add_option("--chord-tol", plan.chord_tol, "Chord length limit relative to curve size");
  app->add_option("--max-points", plan.max_points, "Point budget per curve");
  app->add_flag("--reference-only", plan.reference_only,
                "Build full curves only where the fast check is inconclusive");
  app->add_option("--reference-x", plan.reference_X, "X used for the distance when reference-only");
  app->add_option("--workers", plan.workers, "Worker threads (default: ALBER_WORKERS or all cores)");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text(out, text);
  }
}

std::vector<fs::path> spectrum_files(const fs::path& input) {
  if (fs::is_regular_file(input)) return {input};
  if (!fs::is_directory(input)) throw InputError(input.string() + " does not exist");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(input)) {
    if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

int run(int argc, char** argv) {
  CLI::App app{"Modulational-instability analysis of wave spectra"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Stability report for a spectrum file or directory");
  std::string an_input, an_out_dir, an_out, an_policy = "provided";
  CurveScanPlan an_plan;
  analyze->add_option("input", an_input, "Spectrum CSV or directory of CSVs")->required();
  analyze->add_option("-o,--out", an_out, "Report JSON (single file input; default stdout)");
  analyze->add_option("--out-dir", an_out_dir, "Directory for summary.csv and reports/");
  analyze->add_option("--k0-policy", an_policy, "provided|peak|mean|median");
  add_plan_flags(analyze, an_plan);

  // pti
  auto* pti = app.add_subcommand("pti", "Print stability and PTI; optionally emit curves");
  std::string pti_input, pti_curves, pti_policy = "provided";
  CurveScanPlan pti_plan;
  pti->add_option("input", pti_input, "Spectrum CSV")->required();
  pti->add_option("--curves-dir", pti_curves, "Write one curve CSV and plot script per X");
  pti->add_option("--k0-policy", pti_policy, "provided|peak|mean|median");
  add_plan_flags(pti, pti_plan);

  // crossing
  auto* crossing = app.add_subcommand("crossing", "Crossing-seas stability scan from a JSON config");
  std::string cr_config, cr_out;
  unsigned cr_workers = 0;
  crossing->add_option("config", cr_config, "JSON configuration")->required();
  crossing->add_option("-o,--out", cr_out, "Report JSON (default stdout)");
  crossing->add_option("--workers", cr_workers, "Worker threads");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo sea-state statistics");
  std::string sim_input, sim_out, sim_backend = "nls_split_step";
  MonteCarloProtocol proto;
  simulate->add_option("input", sim_input, "Spectrum CSV or directory of CSVs")->required();
  simulate->add_option("-o,--out", sim_out, "stats CSV (default stdout)");
  simulate->add_option("--backend", sim_backend, "linear|nls_split_step");
  simulate->add_option("--realizations", proto.realizations, "Realizations per spectrum");
  simulate->add_option("--duration", proto.duration, "Record length per realization, s");
  simulate->add_option("--probes", proto.probes, "Equispaced probes");
  simulate->add_option("--dt", proto.dt, "Internal step, s (0: stability limit)");
  simulate->add_option("--dt-out", proto.dt_out, "Probe sampling step, s (0: T0/16)");
  simulate->add_option("--seed", proto.base_seed, "Seed of the first realization");
  simulate->add_option("--scale", proto.scale, "Multiplies realizations and duration");
  simulate->add_option("--n", proto.n, "Grid size (power of two)");
  simulate->add_option("--k-max-factor", proto.k_max_factor, "k_max / k0");
  simulate->add_flag("--spectral-threshold", proto.spectral_threshold,
                     "Rogue threshold 4 sqrt(m0) instead of the time-series Hs");
  simulate->add_option("--workers", proto.workers, "Worker threads");

  // correlate
  auto* correlate_cmd = app.add_subcommand("correlate", "Rank correlations of PTI with sea-state statistics");
  std::string co_summary, co_stats, co_out_dir;
  correlate_cmd->add_option("summary", co_summary, "summary.csv from analyze")->required();
  correlate_cmd->add_option("stats", co_stats, "stats CSV from simulate")->required();
  correlate_cmd->add_option("--out-dir", co_out_dir, "Write correlation.csv, scatter CSVs and plot scripts");

  // gen-fixtures
  auto* gen = app.add_subcommand("gen-fixtures", "Write a synthetic JONSWAP family");
  std::string gen_out, gen_layout = "grid";
  int gen_n = 20;
  JonswapFamily fam;
  gen->add_option("out_dir", gen_out, "Output directory")->required();
  gen->add_option("-n,--count", gen_n, "Number of spectra");
  gen->add_option("--layout", gen_layout, "grid|path");
  gen->add_option("--alpha-min", fam.alpha_min, "Smallest Phillips constant");
  gen->add_option("--alpha-max", fam.alpha_max, "Largest Phillips constant");
  gen->add_option("--gamma-min", fam.gamma_min, "Smallest peak enhancement");
  gen->add_option("--gamma-max", fam.gamma_max, "Largest peak enhancement");
  gen->add_option("--alpha-steps", fam.alpha_steps, "Grid rows (0: squarest)");
  gen->add_option("--fp", fam.fp, "Peak frequency, Hz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (analyze->parsed()) {
    an_plan.validate();
    BatchConfig cfg;
    cfg.plan = an_plan;
    cfg.k0_policy = parse_k0_policy(an_policy);
    cfg.workers = an_plan.workers;
    if (fs::is_directory(an_input)) {
      if (an_out_dir.empty()) throw InputError("analyze: a directory input needs --out-dir");
      cfg.report_dir = fs::path(an_out_dir) / "reports";
      const auto rows = batch_analyze(an_input, cfg, warn);
      write_text(fs::path(an_out_dir) / "summary.csv", summary_csv(rows));
      std::cerr << rows.size() << " spectra analyzed\n";
      return 0;
    }
    StabilityReport r;
    const SummaryRow row = analyze_spectrum(parse_spectrum(an_input), cfg, &r);
    nlohmann::json j = to_json(r);
    j["id"] = row.id;
    j["k0"] = row.k0;
    j["summary"] = to_json(row.summary);
    const std::string text = j.dump(2) + "\n";
    if (!an_out_dir.empty()) {
      write_text(fs::path(an_out_dir) / "reports" / (row.id + ".json"), text);
      write_text(fs::path(an_out_dir) / "summary.csv", summary_csv({row}));
    } else {
      emit(text, an_out);
    }
    return r.complete ? 0 : 2;
  }

  if (pti->parsed()) {
    pti_plan.validate();
    DiscreteSpectrum ds = as_wavenumber(parse_spectrum(pti_input));
    const K0Policy policy = parse_k0_policy(pti_policy);
    if (policy != K0Policy::provided) ds = ds.with_k0(select_k0(ds, policy));
    const RescaledSpectrum P = rescale(ds);
    const StabilityReport r = classify(P, pti_plan);
    std::printf("id=%s stable=%s PTI=%s distance=%s\n", ds.id().c_str(), r.stable ? "true" : "false",
                format_double(r.pti).c_str(), format_double(r.distance).c_str());
    if (!pti_curves.empty()) {
      std::vector<PlotInput> plots;
      for (std::size_t i = 0; i < pti_plan.X_values.size(); ++i) {
        const GammaCurve c = gamma_curve(P, pti_plan.X_values[i], pti_plan);
        const fs::path csv = fs::path(pti_curves) / ("curve_" + std::to_string(i) + ".csv");
        write_text(csv, curve_csv(c));
        plots.push_back({PlotInput::Kind::curve, csv});
      }
      emit_plot_script(plots, pti_curves, warn);
    }
    if (!r.complete) {
      std::cerr << "error: " << r.failure << "\n";
      return 2;
    }
    return 0;
  }

  if (crossing->parsed()) {
    const CrossingConfig cfg = parse_crossing_config(nlohmann::json::parse(read_text(cr_config)));
    ContourParams cp = cfg.contour;
    cp.workers = cr_workers;
    const CrossingReport r =
        stability_scan(cfg.background_A, cfg.background_B, cfg.coefficients, cfg.P, cp);
    emit(to_json(r).dump(2) + "\n", cr_out);
    return 0;
  }

  if (simulate->parsed()) {
    proto.backend = parse_backend(sim_backend);
    proto.validate();
    std::vector<SeaStateStats> rows;
    for (const auto& f : spectrum_files(sim_input)) {
      rows.push_back(run_monte_carlo(as_wavenumber(parse_spectrum(f)), proto));
    }
    std::sort(rows.begin(), rows.end(),
              [](const SeaStateStats& a, const SeaStateStats& b) { return a.id < b.id; });
    emit(stats_csv(rows), sim_out);
    return 0;
  }

  if (correlate_cmd->parsed()) {
    const auto table = correlate(parse_summary_csv(read_text(co_summary)),
                                 parse_stats_csv(read_text(co_stats)));
    const std::string text = correlation_csv(table);
    std::cout << text;
    if (!co_out_dir.empty()) {
      write_text(fs::path(co_out_dir) / "correlation.csv", text);
      std::vector<PlotInput> plots;
      for (const auto& p : write_scatter_csvs(table, co_out_dir)) {
        plots.push_back({PlotInput::Kind::scatter, p});
      }
      emit_plot_script(plots, co_out_dir, warn);
    }
    return 0;
  }

  if (gen->parsed()) {
    if (gen_layout == "grid") {
      fam.layout = JonswapFamily::Layout::grid;
    } else if (gen_layout == "path") {
      fam.layout = JonswapFamily::Layout::path;
    } else {
      throw InputError("layout must be grid or path");
    }
    const auto files = generate_jonswap_family(fam, gen_n, gen_out);
    std::cerr << files.size() << " spectra written to " << gen_out << "\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
