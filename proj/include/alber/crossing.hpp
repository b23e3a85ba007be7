#pragma once

#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "alber/interpolation.hpp"
#include "alber/singular_integral.hpp"

namespace alber {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct WavetrainCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double xi = 0.0;    // self-interaction
  double zeta = 0.0;  // cross-interaction
  Vec2 C{};           // group velocity
  std::optional<Vec2> carrier;
};

struct CoupledNlsCoefficients {
  WavetrainCoefficients A;
  WavetrainCoefficients B;
  double gravity = 9.81;

  // sqrt(g |k|) for a wavetrain with a carrier; nullopt otherwise.
  std::optional<double> carrier_frequency(const WavetrainCoefficients& w) const;
  CoupledNlsCoefficients swapped() const { return {B, A, gravity}; }
};

// Hook for deriving coefficients from carrier wavevectors.
using CoefficientProvider =
    std::function<CoupledNlsCoefficients(Vec2 kA, Vec2 kB, double gravity)>;

struct Gauge {
  double kappa = 0.0;
  double lambda = 0.0;
  double tau = 0.0;
};

struct GaugeParams {
  Gauge A;
  Gauge B;
};

// Throws InputError naming the wavetrain when 4*alpha*beta - gamma^2 == 0.
Gauge gauge_reduce(const WavetrainCoefficients& w, const std::string& name = "A");
GaugeParams gauge_reduce(const CoupledNlsCoefficients& c);
// Residuals of the three gauge equations, max abs.
double gauge_residual(const WavetrainCoefficients& w, const Gauge& g);

double bilinear_form(const WavetrainCoefficients& w, Vec2 P, Vec2 Q);

// Nonnegative spectrum on a wavevector box, zero outside it.
class HomogeneousBackground2D {
 public:
  HomogeneousBackground2D() = default;  // identically zero
  HomogeneousBackground2D(std::function<double(double, double)> density, double x0, double x1,
                          double y0, double y1, std::string label = {});

  static HomogeneousBackground2D zero() { return {}; }
  // mass * exp(-(dx^2/2sx^2 + dy^2/2sy^2)) / (2 pi sx sy), support +-6 sigma.
  static HomogeneousBackground2D gaussian(double mass, Vec2 center, double sx, double sy);
  static HomogeneousBackground2D sum(const std::vector<HomogeneousBackground2D>& parts);
  // Bilinear interpolation of values[i * ny + j] at (xs[i], ys[j]).
  static HomogeneousBackground2D tabulated(std::vector<double> xs, std::vector<double> ys,
                                           std::vector<double> values);

  double operator()(double x, double y) const;
  bool is_zero() const { return !density_; }
  double x0() const { return x0_; }
  double x1() const { return x1_; }
  double y0() const { return y0_; }
  double y1() const { return y1_; }
  const std::string& label() const { return label_; }
  HomogeneousBackground2D scaled(double factor) const;

 private:
  std::function<double(double, double)> density_;
  double x0_ = 0.0, x1_ = 0.0, y0_ = 0.0, y1_ = 0.0;
  std::string label_;
};

struct TransferParams {
  QuadratureParams quad{};
  int marginal_points = 1025;
  double marginal_rel_tol = 1e-9;
  int marginal_panels = 64;
};

// Integral of f over the line {Q : c_hat . Q = s} for a grid of s, packaged as
// an interpolant. Used to turn the 2-D resolvent integral into a 1-D Cauchy
// integral along c_hat.
class PreparedTransfer {
 public:
  PreparedTransfer(const WavetrainCoefficients& w, const HomogeneousBackground2D& bg, Vec2 P,
                   const TransferParams& params);
  // Numerator f(Q) supplied directly (no shift difference).
  PreparedTransfer(const WavetrainCoefficients& w, const std::function<double(double, double)>& f,
                   double x0, double x1, double y0, double y1, Vec2 P,
                   const TransferParams& params);

  cplx operator()(cplx omega) const;
  TransformSample evaluate(cplx omega, const QuadratureParams& quad) const;
  bool vanishes() const { return vanishes_; }
  // max |<P,Q>| over the background support.
  double max_form() const { return max_form_; }

 private:
  void build(const std::function<double(double, double)>& f, double x0, double x1, double y0,
             double y1, double shift, bool difference);

  TransferParams params_;
  double cnorm_ = 0.0;
  Vec2 chat_{};
  double max_form_ = 0.0;
  bool vanishes_ = true;
  double prefactor_ = 0.0;
  // Response mode with <P,.> identically zero: value is mass / (i omega).
  std::optional<double> flat_mass_;
  std::shared_ptr<const MonotoneCubic> marginal_;
  SupportedFunction numerator_;
};

// h_j(P, omega); Re omega must be > 0.
cplx transfer_function(const WavetrainCoefficients& w, const HomogeneousBackground2D& bg, Vec2 P,
                       cplx omega, const TransferParams& params = {});

// Response integral of a caller-supplied numerator f(Q) against the same
// resolvent, without the factor 2 or shift difference.
cplx initial_response(const WavetrainCoefficients& w,
                      const std::function<double(double, double)>& numerator, double x0,
                      double x1, double y0, double y1, Vec2 P, cplx omega,
                      const TransferParams& params = {});

cplx dispersion_determinant(cplx hA, cplx hB, const CoupledNlsCoefficients& c);

struct ContourParams {
  double delta = 1e-3;
  double omega_dilation = 2.0;
  int base_points = 256;
  int refine_passes = 10;
  double max_arg_step = std::numbers::pi / 8.0;
  std::size_t max_points = 12000;
  // The contour is extended (doubling) until |F - 1| < tail_tol at both ends.
  double tail_tol = 1e-3;
  int max_extensions = 8;
  double bound_limit = 1e8;
  bool locate_zeros = true;
  TransferParams transfer{};
  unsigned workers = 0;
};

struct Witness {
  Vec2 P;
  cplx omega;
  cplx F;
  bool zero = false;  // located determinant zero
};

struct ContourTrace {
  Vec2 P;
  std::vector<cplx> omega;  // from +i*Omega down to -i*Omega
  std::vector<cplx> F;
  int winding = 0;  // zeros enclosed in Re omega > delta
  double min_abs = 1.0;
  cplx argmin_omega{};
  double tail_deviation = 0.0;
  double omega_max = 0.0;
  double sup_h = 0.0;
  double max_error = 0.0;
  // min |F| on the contour is within the quadrature error of zero
  bool resolution_limited = false;
  std::optional<Witness> zero;
};

struct PDiagnostics {
  Vec2 P;
  int winding = 0;
  double min_abs = 1.0;
  double tail_deviation = 0.0;
  double omega_max = 0.0;
  std::size_t samples = 0;
};

struct CrossingReport {
  double kappa_min = 1.0;
  bool bounded = true;
  double sup_h = 0.0;
  bool unstable = false;
  bool resolution_limited = false;
  std::vector<Witness> witnesses;
  std::vector<PDiagnostics> per_P;
};

ContourTrace trace_determinant(const HomogeneousBackground2D& bgA,
                               const HomogeneousBackground2D& bgB,
                               const CoupledNlsCoefficients& c, Vec2 P,
                               const ContourParams& params = {});

CrossingReport stability_scan(const HomogeneousBackground2D& bgA,
                              const HomogeneousBackground2D& bgB,
                              const CoupledNlsCoefficients& c, const std::vector<Vec2>& P_grid,
                              const ContourParams& params = {});

// radii x angles in [0, pi). The determinant at -P is the conjugate of the one
// at P with omega reflected, so the other half-plane adds nothing.
std::vector<Vec2> polar_grid(const std::vector<double>& radii, int angles);

}  // namespace alber
