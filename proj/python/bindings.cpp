#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "alber/error.hpp"
#include "alber/io.hpp"
#include "alber/montecarlo.hpp"
#include "alber/stability.hpp"
#include "alber/wave_stats.hpp"

namespace py = pybind11;
using namespace alber;

namespace {

py::dict report_dict(const StabilityReport& r) {
  return py::module_::import("json").attr("loads")(to_json(r).dump());
}

CurveScanPlan make_plan(const std::optional<std::vector<double>>& x_values, double eta,
                        double rel_tol, bool reference_only, unsigned workers) {
  CurveScanPlan plan;
  if (x_values) plan.X_values = *x_values;
  plan.quad.eta = eta;
  plan.quad.rel_tol = rel_tol;
  plan.reference_only = reference_only;
  plan.workers = workers;
  plan.validate();
  return plan;
}

DiscreteSpectrum py_wavenumber(const py::object& s) {
  if (py::isinstance<DiscreteSpectrum>(s)) return s.cast<DiscreteSpectrum>();
  if (py::isinstance<FrequencySpectrum>(s)) {
    return frequency_to_wavenumber(s.cast<FrequencySpectrum>());
  }
  throw InputError("expected DiscreteSpectrum or FrequencySpectrum");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Modulational-instability analysis of ocean wave spectra";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<NumericalError> numerical_error(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const NumericalError& e) {
      py::set_error(numerical_error, e.what());
    }
  });

  m.attr("PENROSE_POINT") = kPenrosePoint;

  py::class_<FrequencySpectrum>(m, "FrequencySpectrum")
      .def(py::init<std::vector<double>, std::vector<double>, double, std::string,
                    std::optional<double>>(),
           py::arg("omega"), py::arg("energy"), py::arg("gravity") = kStandardGravity,
           py::arg("id") = "", py::arg("k0") = py::none())
      .def_property_readonly("omega", [](const FrequencySpectrum& s) {
        return std::vector<double>(s.omega().begin(), s.omega().end());
      })
      .def_property_readonly("energy", [](const FrequencySpectrum& s) {
        return std::vector<double>(s.energy().begin(), s.energy().end());
      })
      .def_property_readonly("id", &FrequencySpectrum::id)
      .def_property_readonly("k0", &FrequencySpectrum::k0);

  py::class_<DiscreteSpectrum>(m, "DiscreteSpectrum")
      .def(py::init<std::vector<double>, std::vector<double>, double, std::string>(),
           py::arg("k"), py::arg("density"), py::arg("k0"), py::arg("id") = "")
      .def_property_readonly("k", [](const DiscreteSpectrum& s) {
        return std::vector<double>(s.wavenumbers().begin(), s.wavenumbers().end());
      })
      .def_property_readonly("density", [](const DiscreteSpectrum& s) {
        return std::vector<double>(s.densities().begin(), s.densities().end());
      })
      .def_property_readonly("k0", &DiscreteSpectrum::k0)
      .def_property_readonly("id", &DiscreteSpectrum::id)
      .def("energy", &DiscreteSpectrum::energy)
      .def("density_at", &DiscreteSpectrum::density_at)
      .def("scaled", &DiscreteSpectrum::scaled)
      .def("with_k0", &DiscreteSpectrum::with_k0);

  m.def("frequency_to_wavenumber", &frequency_to_wavenumber);
  m.def(
      "select_k0",
      [](const DiscreteSpectrum& s, const std::string& policy) {
        return select_k0(s, parse_k0_policy(policy));
      },
      py::arg("spectrum"), py::arg("policy") = "peak");
  m.def(
      "spectral_summary",
      [](const py::object& s) {
        SpectralSummary r;
        if (py::isinstance<FrequencySpectrum>(s)) {
          const auto f = s.cast<FrequencySpectrum>();
          r = spectral_summary(f, frequency_to_wavenumber(f).k0());
        } else {
          r = spectral_summary(s.cast<DiscreteSpectrum>());
        }
        py::dict d;
        d["m0"] = r.m0;
        d["Hs"] = r.hs;
        d["Qp"] = r.qp;
        d["delta_omega"] = r.delta_omega;
        d["eps"] = r.steepness;
        d["BFI"] = r.bfi;
        return d;
      },
      py::arg("spectrum"));

  m.def(
      "parse_spectrum",
      [](const fs::path& path) -> py::object {
        const auto s = parse_spectrum(path);
        if (const auto* d = std::get_if<DiscreteSpectrum>(&s)) return py::cast(*d);
        return py::cast(std::get<FrequencySpectrum>(s));
      },
      py::arg("path"));

  m.def(
      "jonswap_spectrum",
      [](double fp, double alpha, double gamma, const std::string& id) {
        JonswapParams p;
        p.fp = fp;
        p.alpha = alpha;
        p.gamma = gamma;
        return jonswap_spectrum(p, id);
      },
      py::arg("fp") = 0.1, py::arg("alpha") = 0.0081, py::arg("gamma") = 3.3,
      py::arg("id") = "jonswap");

  m.def(
      "cauchy_integral",
      [](const std::function<double(double)>& f, double lo, double hi, cplx z, double rel_tol) {
        QuadratureParams q;
        q.rel_tol = rel_tol;
        const auto s = cauchy_integral({f, lo, hi, {}}, z, q);
        return py::make_tuple(s.value, s.est_error);
      },
      py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("z"), py::arg("rel_tol") = 1e-2,
      "(1/pi) * integral of f(s) / (z - s) ds over [lo, hi]; returns (value, error estimate).");

  m.def(
      "classify",
      [](const py::object& s, std::optional<std::vector<double>> x_values, double eta,
         double rel_tol, bool reference_only, unsigned workers) {
        const DiscreteSpectrum ds = py_wavenumber(s);
        const CurveScanPlan plan = make_plan(x_values, eta, rel_tol, reference_only, workers);
        StabilityReport r;
        {
          py::gil_scoped_release release;
          r = classify(rescale(ds), plan);
        }
        return report_dict(r);
      },
      py::arg("spectrum"), py::arg("x_values") = py::none(), py::arg("eta") = 1e-4,
      py::arg("rel_tol") = 1e-2, py::arg("reference_only") = false, py::arg("workers") = 0);

  m.def(
      "gamma_curve",
      [](const py::object& s, double X, double eta) {
        CurveScanPlan plan;
        plan.quad.eta = eta;
        const DiscreteSpectrum ds = py_wavenumber(s);
        GammaCurve c;
        {
          py::gil_scoped_release release;
          c = gamma_curve(rescale(ds), X, plan);
        }
        std::vector<double> t;
        std::vector<cplx> z;
        for (const auto& p : c.points) {
          t.push_back(p.t);
          z.push_back(p.z);
        }
        return py::make_tuple(t, z);
      },
      py::arg("spectrum"), py::arg("X"), py::arg("eta") = 1e-4,
      "Curve points (t, z); the origin is last with t = inf.");

  m.def(
      "crossing_scan",
      [](const std::string& config_json) {
        const CrossingConfig cfg = parse_crossing_config(nlohmann::json::parse(config_json));
        CrossingReport r;
        {
          py::gil_scoped_release release;
          r = stability_scan(cfg.background_A, cfg.background_B, cfg.coefficients, cfg.P,
                             cfg.contour);
        }
        return py::module_::import("json").attr("loads")(to_json(r).dump());
      },
      py::arg("config_json"));

  m.def(
      "run_monte_carlo",
      [](const py::object& s, int realizations, double duration, const std::string& backend,
         std::uint64_t seed, int n, double k_max_factor, int probes, double dt_out,
         bool spectral_threshold, unsigned workers) {
        MonteCarloProtocol p;
        p.realizations = realizations;
        p.duration = duration;
        p.backend = parse_backend(backend);
        p.base_seed = seed;
        p.n = n;
        p.k_max_factor = k_max_factor;
        p.probes = probes;
        p.dt_out = dt_out;
        p.spectral_threshold = spectral_threshold;
        p.workers = workers;
        const DiscreteSpectrum ds = py_wavenumber(s);
        SeaStateStats st;
        {
          py::gil_scoped_release release;
          st = run_monte_carlo(ds, p);
        }
        return py::module_::import("json").attr("loads")(to_json(st).dump());
      },
      py::arg("spectrum"), py::arg("realizations") = 10, py::arg("duration") = 600.0,
      py::arg("backend") = "nls_split_step", py::arg("seed") = 1, py::arg("n") = 1024,
      py::arg("k_max_factor") = 8.0, py::arg("probes") = 4, py::arg("dt_out") = 0.0,
      py::arg("spectral_threshold") = false, py::arg("workers") = 0);

  m.def(
      "excess_kurtosis",
      [](const std::vector<double>& x) { return excess_kurtosis(x); }, py::arg("samples"));
  m.def(
      "spearman_rank",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        return spearman_rank(x, y);
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "isserlis_closure_test",
      [](std::uint64_t n, cplx rho, std::uint64_t seed) {
        const auto r = isserlis_closure_test(n, rho, seed);
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["discrepancy"] = r.discrepancy;
        d["relative"] = r.relative;
        return d;
      },
      py::arg("n"), py::arg("rho"), py::arg("seed") = 1);

  m.def(
      "correlate_files",
      [](const fs::path& summary, const fs::path& stats) {
        const auto t = correlate(parse_summary_csv(read_text(summary)),
                                 parse_stats_csv(read_text(stats)));
        py::dict d;
        for (const auto& c : t.rho) d[py::str(c.y)] = c.rho;
        return d;
      },
      py::arg("summary_csv"), py::arg("stats_csv"));
}
