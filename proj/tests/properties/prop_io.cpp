#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>

#include "../support/fixtures.hpp"
#include "alber/io.hpp"

using namespace alber;
using namespace alber::testing;

namespace {

// Positive double with random mantissa bits over many decades.
double random_positive(Rng& rng, double lo_exp, double hi_exp) {
  const double v = std::pow(10.0, rng.uniform(lo_exp, hi_exp));
  std::uint64_t b;
  std::memcpy(&b, &v, sizeof b);
  b ^= rng.bits() & ((std::uint64_t{1} << 40) - 1);
  double out;
  std::memcpy(&out, &b, sizeof out);
  return out;
}

class TempDir {
 public:
  explicit TempDir(Rng& rng)
      : path_(fs::temp_directory_path() / ("alber_prop_" + std::to_string(rng.bits()))) {
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ALBER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

ALBER_PROPERTY("cli_io", "emitted spectra parse back bit-exactly", 100) {
  SpectrumFile f;
  f.kind = rng.chance(0.5) ? "wavenumber" : "frequency";
  f.units = f.kind == "frequency" && rng.chance(0.5) ? "hz" : "rad";
  if (rng.chance(0.7)) f.k0 = random_positive(rng, -3.0, 1.0);
  f.id = "s" + std::to_string(rng.integer(0, 1 << 20));
  const int n = rng.integer(4, 80);
  double x = random_positive(rng, -3.0, 0.0);
  for (int i = 0; i < n; ++i) {
    f.x.push_back(x);
    x += random_positive(rng, -6.0, -1.0);
    f.y.push_back(rng.chance(0.1) ? 0.0 : random_positive(rng, -12.0, 6.0));
  }
  const SpectrumFile g = read_spectrum_text(emit_spectrum(f));
  require(g.kind == f.kind && g.units == f.units && g.id == f.id && g.k0 == f.k0, "header changed");
  require(g.x == f.x && g.y == f.y, "samples changed");

  const DiscreteSpectrum S = random_wavenumber_spectrum(rng);
  const DiscreteSpectrum T = as_wavenumber(to_spectrum(read_spectrum_text(emit_spectrum(S))));
  require(T.k0() == S.k0(), "k0 changed");
  for (std::size_t i = 0; i < S.size(); ++i) {
    require(T.wavenumbers()[i] == S.wavenumbers()[i] && T.densities()[i] == S.densities()[i],
            msg("sample ", i, " changed"));
  }
}

ALBER_PROPERTY("cli_io", "batch summaries are byte-identical across worker counts", 100) {
  TempDir dir(rng);
  const int files = rng.integer(1, 3);
  for (int i = 0; i < files; ++i) {
    if (rng.chance(0.5)) {
      const FrequencySpectrum E = jonswap_spectrum(random_jonswap(rng), "j" + std::to_string(i));
      write_text(dir.path() / ("f" + std::to_string(i) + ".csv"), emit_spectrum(E));
    } else {
      write_text(dir.path() / ("w" + std::to_string(i) + ".csv"),
                 emit_spectrum(random_wavenumber_spectrum(rng, 30, 40)));
    }
  }
  if (rng.chance(0.2)) write_text(dir.path() / "broken.csv", "# kind=wavenumber k0=1 id=broken\n1,x\n");
  BatchConfig cfg;
  cfg.plan = quick_plan({5e-4});
  cfg.plan.base_points = 32;
  cfg.k0_policy = rng.chance(0.5) ? K0Policy::provided : K0Policy::peak;
  cfg.workers = 1;
  const std::string one = summary_csv(batch_analyze(dir.path(), cfg));
  cfg.workers = 2;
  const std::string two = summary_csv(batch_analyze(dir.path(), cfg));
  require(one == two, "summary differs between 1 and 2 workers:\n" + one + "\n" + two);
}

ALBER_PROPERTY("cli_io", "CLI exit codes follow the error class", 100) {
  TempDir dir(rng);
  const fs::path good = dir.path() / "good.csv";
  write_text(good, emit_spectrum(random_wavenumber_spectrum(rng, 30, 40)));
  const std::string quick =
      " --x-values 5e-4 --base-points 32 --refine-passes 1 --workers 1 -o " +
      (dir.path() / "out.json").string();
  const int kind = rng.integer(0, 5);
  int expect = 0;
  std::string args;
  switch (kind) {
    case 0:
      args = "analyze " + good.string() + quick;
      break;
    case 1: {
      const fs::path bad = dir.path() / "bad.csv";
      const char* bodies[] = {"", "# kind=wavenumber id=x\n1,1\n", "# kind=wavenumber k0=1 id=x\n2,1\n1,1\n",
                              "# kind=sideways k0=1 id=x\n1,1\n2,1\n3,1\n4,1\n",
                              "# kind=wavenumber k0=1 id=x\n1,1,1\n"};
      write_text(bad, bodies[rng.integer(0, 4)]);
      args = "analyze " + bad.string() + quick;
      expect = 1;
      break;
    }
    case 2:
      args = "analyze " + (dir.path() / "missing.csv").string() + quick;
      expect = 1;
      break;
    case 3:
      args = rng.chance(0.5) ? "analyze " + good.string() + " --eta -1" : "no-such-command";
      expect = 1;
      break;
    case 4:
      args = "analyze " + good.string() + quick + " --rel-tol 1e-15 --abs-tol 1e-300 --max-levels 1";
      expect = 2;
      break;
    default:
      args = "simulate " + good.string() + " --realizations 1 --duration 100 --n 5";
      expect = 1;
      break;
  }
  const int code = run_cli(args);
  require(code == expect, msg("exit code ", code, " (expected ", expect, ") for: alber ", args));
}
