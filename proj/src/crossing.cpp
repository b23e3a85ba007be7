#include "alber/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "alber/error.hpp"
#include "alber/parallel.hpp"

namespace alber {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi2 = 4.0 * kPi * kPi;

Vec2 form_gradient(const WavetrainCoefficients& w, Vec2 P) {
  return {kFourPi2 * (2.0 * w.alpha * P.x + w.gamma * P.y),
          kFourPi2 * (2.0 * w.beta * P.y + w.gamma * P.x)};
}

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Composite Simpson along r with coarse/fine (x3) comparison.
double line_integral(const std::function<double(double)>& g, double a, double b, int panels,
                     double rel_tol, double abs_floor) {
  if (!(b > a)) return 0.0;
  double fine = 0.0;
  for (int level = 0; level < 12; ++level) {
    const int m = panels << level;  // coarse subintervals, even
    const int nf = 3 * m;
    const double hf = (b - a) / nf;
    double sf = 0.0;
    double sc = 0.0;
    for (int i = 0; i <= nf; ++i) {
      const double v = g(i == nf ? b : a + i * hf);
      const double wf = (i == 0 || i == nf) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      sf += wf * v;
      if (i % 3 == 0) {
        const int j = i / 3;
        const double wc = (j == 0 || j == m) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        sc += wc * v;
      }
    }
    fine = sf * hf / 3.0;
    const double coarse = sc * hf;
    const double err = std::abs(fine - coarse);
    if (err <= rel_tol * std::abs(fine) || err <= abs_floor) return fine;
  }
  return fine;
}

// r-interval of the line s*chat + r*perp inside the box.
bool chord(double s, Vec2 chat, Vec2 perp, double x0, double x1, double y0, double y1, double& r0,
           double& r1) {
  r0 = -std::numeric_limits<double>::infinity();
  r1 = std::numeric_limits<double>::infinity();
  auto clip = [&](double base, double dir, double lo, double hi) {
    if (std::abs(dir) < 1e-300) return base >= lo && base <= hi;
    double a = (lo - base) / dir;
    double b = (hi - base) / dir;
    if (a > b) std::swap(a, b);
    r0 = std::max(r0, a);
    r1 = std::min(r1, b);
    return true;
  };
  if (!clip(s * chat.x, perp.x, x0, x1)) return false;
  if (!clip(s * chat.y, perp.y, y0, y1)) return false;
  return r1 > r0;
}

}  // namespace

std::optional<double> CoupledNlsCoefficients::carrier_frequency(
    const WavetrainCoefficients& w) const {
  if (!w.carrier) return std::nullopt;
  return std::sqrt(gravity * norm(*w.carrier));
}

Gauge gauge_reduce(const WavetrainCoefficients& w, const std::string& name) {
  const double det = 4.0 * w.alpha * w.beta - w.gamma * w.gamma;
  const double scale = std::max({std::abs(w.alpha * w.beta), w.gamma * w.gamma, 1e-300});
  if (std::abs(det) <= 1e-14 * scale || !std::isfinite(det)) {
    throw InputError("gauge reduction: degenerate coefficients for wavetrain " + name +
                     " (4*alpha*beta - gamma^2 = 0)");
  }
  Gauge g;
  g.kappa = (-w.C.x * 2.0 * w.beta + w.gamma * w.C.y) / det;
  g.lambda = (-2.0 * w.alpha * w.C.y + w.gamma * w.C.x) / det;
  g.tau = -w.C.x * g.kappa - w.C.y * g.lambda - w.alpha * g.kappa * g.kappa -
          w.beta * g.lambda * g.lambda - w.gamma * g.kappa * g.lambda;
  return g;
}

GaugeParams gauge_reduce(const CoupledNlsCoefficients& c) {
  return {gauge_reduce(c.A, "A"), gauge_reduce(c.B, "B")};
}

double gauge_residual(const WavetrainCoefficients& w, const Gauge& g) {
  const double r1 = 2.0 * w.alpha * g.kappa + w.gamma * g.lambda + w.C.x;
  const double r2 = w.gamma * g.kappa + 2.0 * w.beta * g.lambda + w.C.y;
  const double r3 = g.tau + w.C.x * g.kappa + w.C.y * g.lambda + w.alpha * g.kappa * g.kappa +
                    w.beta * g.lambda * g.lambda + w.gamma * g.kappa * g.lambda;
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

double bilinear_form(const WavetrainCoefficients& w, Vec2 P, Vec2 Q) {
  return kFourPi2 * (2.0 * w.alpha * P.x * Q.x + 2.0 * w.beta * P.y * Q.y +
                     w.gamma * (P.x * Q.y + P.y * Q.x));
}

HomogeneousBackground2D::HomogeneousBackground2D(std::function<double(double, double)> density,
                                                 double x0, double x1, double y0, double y1,
                                                 std::string label)
    : density_(std::move(density)), x0_(x0), x1_(x1), y0_(y0), y1_(y1), label_(std::move(label)) {
  if (!density_) throw InputError("background: missing density");
  if (!(x1_ > x0_) || !(y1_ > y0_)) throw InputError("background: empty support box");
}

HomogeneousBackground2D HomogeneousBackground2D::gaussian(double mass, Vec2 center, double sx,
                                                          double sy) {
  if (!(mass >= 0.0)) throw InputError("background: gaussian mass must be >= 0");
  if (!(sx > 0.0) || !(sy > 0.0)) throw InputError("background: gaussian widths must be > 0");
  if (mass == 0.0) return zero();
  const double norm_c = mass / (2.0 * kPi * sx * sy);
  return {[=](double x, double y) {
            const double dx = (x - center.x) / sx;
            const double dy = (y - center.y) / sy;
            return norm_c * std::exp(-0.5 * (dx * dx + dy * dy));
          },
          center.x - 6.0 * sx, center.x + 6.0 * sx, center.y - 6.0 * sy, center.y + 6.0 * sy,
          "gaussian"};
}

HomogeneousBackground2D HomogeneousBackground2D::sum(
    const std::vector<HomogeneousBackground2D>& parts) {
  std::vector<HomogeneousBackground2D> live;
  for (const auto& p : parts) {
    if (!p.is_zero()) live.push_back(p);
  }
  if (live.empty()) return zero();
  double x0 = live[0].x0_, x1 = live[0].x1_, y0 = live[0].y0_, y1 = live[0].y1_;
  for (const auto& p : live) {
    x0 = std::min(x0, p.x0_);
    x1 = std::max(x1, p.x1_);
    y0 = std::min(y0, p.y0_);
    y1 = std::max(y1, p.y1_);
  }
  return {[live](double x, double y) {
            double v = 0.0;
            for (const auto& p : live) v += p(x, y);
            return v;
          },
          x0, x1, y0, y1, "sum"};
}

HomogeneousBackground2D HomogeneousBackground2D::tabulated(std::vector<double> xs,
                                                           std::vector<double> ys,
                                                           std::vector<double> values) {
  if (xs.size() < 2 || ys.size() < 2) throw InputError("background: grid needs 2x2 nodes");
  if (values.size() != xs.size() * ys.size()) {
    throw InputError("background: grid value count does not match axes");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw InputError("background: x axis must increase");
  }
  for (std::size_t j = 1; j < ys.size(); ++j) {
    if (!(ys[j] > ys[j - 1])) throw InputError("background: y axis must increase");
  }
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw InputError("background: values must be >= 0");
  }
  const double x0 = xs.front(), x1 = xs.back(), y0 = ys.front(), y1 = ys.back();
  auto f = [xs = std::move(xs), ys = std::move(ys), v = std::move(values)](double x, double y) {
    const std::size_t ny = ys.size();
    auto locate = [](const std::vector<double>& a, double q) {
      auto it = std::upper_bound(a.begin(), a.end(), q);
      std::size_t i = it == a.begin() ? 0 : static_cast<std::size_t>(it - a.begin()) - 1;
      return std::min(i, a.size() - 2);
    };
    const std::size_t i = locate(xs, x);
    const std::size_t j = locate(ys, y);
    const double tx = (x - xs[i]) / (xs[i + 1] - xs[i]);
    const double ty = (y - ys[j]) / (ys[j + 1] - ys[j]);
    return (1 - tx) * (1 - ty) * v[i * ny + j] + tx * (1 - ty) * v[(i + 1) * ny + j] +
           (1 - tx) * ty * v[i * ny + j + 1] + tx * ty * v[(i + 1) * ny + j + 1];
  };
  return {std::move(f), x0, x1, y0, y1, "grid"};
}

double HomogeneousBackground2D::operator()(double x, double y) const {
  if (!density_ || x < x0_ || x > x1_ || y < y0_ || y > y1_) return 0.0;
  return density_(x, y);
}

HomogeneousBackground2D HomogeneousBackground2D::scaled(double factor) const {
  if (!(factor >= 0.0)) throw InputError("background: scale factor must be >= 0");
  if (is_zero() || factor == 0.0) return zero();
  auto d = density_;
  return {[d, factor](double x, double y) { return factor * d(x, y); }, x0_, x1_, y0_, y1_,
          label_};
}

PreparedTransfer::PreparedTransfer(const WavetrainCoefficients& w,
                                   const HomogeneousBackground2D& bg, Vec2 P,
                                   const TransferParams& params)
    : params_(params) {
  if (bg.is_zero() || (P.x == 0.0 && P.y == 0.0)) return;
  const Vec2 c = form_gradient(w, P);
  cnorm_ = norm(c);
  if (cnorm_ == 0.0) return;
  chat_ = {c.x / cnorm_, c.y / cnorm_};
  prefactor_ = 2.0 * kPi / cnorm_;
  build([&bg](double x, double y) { return bg(x, y); }, bg.x0(), bg.x1(), bg.y0(), bg.y1(),
        0.5 * dot(chat_, P), true);
}

PreparedTransfer::PreparedTransfer(const WavetrainCoefficients& w,
                                   const std::function<double(double, double)>& f, double x0,
                                   double x1, double y0, double y1, Vec2 P,
                                   const TransferParams& params)
    : params_(params) {
  if (!f) return;
  if (!(x1 > x0) || !(y1 > y0)) throw InputError("response: empty support box");
  const Vec2 c = form_gradient(w, P);
  cnorm_ = norm(c);
  if (cnorm_ == 0.0) {
    chat_ = {1.0, 0.0};
    build(f, x0, x1, y0, y1, 0.0, false);
    flat_mass_ = marginal_ ? marginal_->integral() : 0.0;
    vanishes_ = false;
    return;
  }
  chat_ = {c.x / cnorm_, c.y / cnorm_};
  prefactor_ = kPi / cnorm_;
  build(f, x0, x1, y0, y1, 0.0, false);
}

void PreparedTransfer::build(const std::function<double(double, double)>& f, double x0,
                             double x1, double y0, double y1, double shift, bool difference) {
  const Vec2 perp{-chat_.y, chat_.x};
  const double corners[4] = {x0 * chat_.x + y0 * chat_.y, x1 * chat_.x + y0 * chat_.y,
                             x0 * chat_.x + y1 * chat_.y, x1 * chat_.x + y1 * chat_.y};
  const double s0 = *std::min_element(corners, corners + 4);
  const double s1 = *std::max_element(corners, corners + 4);
  max_form_ = cnorm_ * std::max(std::abs(s0), std::abs(s1));

  const int n = std::max(5, params_.marginal_points);
  std::vector<double> s(n);
  std::vector<double> g(n);
  double peak = 0.0;
  for (int i = 0; i < n; ++i) {
    s[i] = i == n - 1 ? s1 : s0 + (s1 - s0) * i / (n - 1);
    double r0 = 0.0;
    double r1 = 0.0;
    if (!chord(s[i], chat_, perp, x0, x1, y0, y1, r0, r1)) {
      g[i] = 0.0;
      continue;
    }
    const double si = s[i];
    const Vec2 ch = chat_;
    g[i] = line_integral(
        [&](double r) { return f(si * ch.x + r * perp.x, si * ch.y + r * perp.y); }, r0, r1,
        params_.marginal_panels, params_.marginal_rel_tol, 1e-13 * peak);
    g[i] = std::max(0.0, g[i]);
    peak = std::max(peak, g[i]);
  }
  if (peak == 0.0) return;
  vanishes_ = false;
  marginal_ = std::make_shared<const MonotoneCubic>(s, g);

  auto G = marginal_;
  const double lo = s0;
  const double hi = s1;
  auto at = [G, lo, hi](double v) { return v < lo || v > hi ? 0.0 : (*G)(v); };
  if (difference) {
    const double a = shift;
    numerator_.f = [at, a](double v) { return at(v + a) - at(v - a); };
    numerator_.lo = lo - std::abs(a);
    numerator_.hi = hi + std::abs(a);
    if (a == 0.0) vanishes_ = true;
  } else {
    numerator_.f = at;
    numerator_.lo = lo;
    numerator_.hi = hi;
  }
}

TransformSample PreparedTransfer::evaluate(cplx omega, const QuadratureParams& quad) const {
  if (!(omega.real() > 0.0)) throw InputError("transfer function: Re omega must be > 0");
  TransformSample out;
  out.t = omega.imag();
  if (vanishes_) return out;
  if (flat_mass_) {
    out.value = *flat_mass_ / (cplx(0.0, 1.0) * omega);
    return out;
  }
  const cplx z = cplx(0.0, 1.0) * omega / cnorm_;
  TransformSample s = cauchy_integral(numerator_, z, quad);
  s.value *= prefactor_;
  s.est_error *= prefactor_;
  return s;
}

cplx PreparedTransfer::operator()(cplx omega) const {
  return evaluate(omega, params_.quad).value;
}

cplx transfer_function(const WavetrainCoefficients& w, const HomogeneousBackground2D& bg, Vec2 P,
                       cplx omega, const TransferParams& params) {
  if (!(omega.real() > 0.0)) throw InputError("transfer function: Re omega must be > 0");
  return PreparedTransfer(w, bg, P, params)(omega);
}

cplx initial_response(const WavetrainCoefficients& w,
                      const std::function<double(double, double)>& numerator, double x0,
                      double x1, double y0, double y1, Vec2 P, cplx omega,
                      const TransferParams& params) {
  if (!(omega.real() > 0.0)) throw InputError("response: Re omega must be > 0");
  return PreparedTransfer(w, numerator, x0, x1, y0, y1, P, params)(omega);
}

cplx dispersion_determinant(cplx hA, cplx hB, const CoupledNlsCoefficients& c) {
  return (1.0 - c.A.xi * hA) * (1.0 - c.B.xi * hB) - c.A.zeta * c.B.zeta * hA * hB;
}

namespace {

struct Evaluated {
  cplx F;
  double h_sum;
  double err;
};

struct Pair {
  const PreparedTransfer& A;
  const PreparedTransfer& B;
  const CoupledNlsCoefficients& c;

  Evaluated operator()(cplx omega, const QuadratureParams& quad) const {
    const TransformSample a = A.evaluate(omega, quad);
    const TransformSample b = B.evaluate(omega, quad);
    const cplx F = dispersion_determinant(a.value, b.value, c);
    // first-order propagation of the quadrature error estimates
    const double zz = std::abs(c.A.zeta * c.B.zeta);
    const double dA = std::abs(c.A.xi * (1.0 - c.B.xi * b.value)) + zz * std::abs(b.value);
    const double dB = std::abs(c.B.xi * (1.0 - c.A.xi * a.value)) + zz * std::abs(a.value);
    return {F, std::abs(a.value) + std::abs(b.value), dA * a.est_error + dB * b.est_error};
  }
};

double arg_step(cplx a, cplx b) { return std::arg(b / a); }

}  // namespace

ContourTrace trace_determinant(const HomogeneousBackground2D& bgA,
                               const HomogeneousBackground2D& bgB,
                               const CoupledNlsCoefficients& c, Vec2 P,
                               const ContourParams& params) {
  if (!(params.delta > 0.0)) throw InputError("contour: delta must be > 0");
  if (!(params.omega_dilation > 0.0)) throw InputError("contour: dilation must be > 0");
  if (params.base_points < 8) throw InputError("contour: at least 8 base points");
  params.transfer.quad.validate();

  ContourTrace trace;
  trace.P = P;
  const PreparedTransfer tA(c.A, bgA, P, params.transfer);
  const PreparedTransfer tB(c.B, bgB, P, params.transfer);
  const Pair pair{tA, tB, c};
  const double delta = params.delta;

  double omega_max = params.omega_dilation * std::max(tA.max_form(), tB.max_form());
  if ((tA.vanishes() && tB.vanishes()) || omega_max == 0.0) {
    trace.omega = {cplx(delta, 0.0)};
    trace.F = {cplx(1.0, 0.0)};
    trace.min_abs = 1.0;
    trace.argmin_omega = trace.omega.front();
    return trace;
  }

  auto tail = [&](double Om) {
    const Evaluated top = pair(cplx(delta, Om), params.transfer.quad);
    const Evaluated bot = pair(cplx(delta, -Om), params.transfer.quad);
    return std::max(std::abs(top.F - 1.0), std::abs(bot.F - 1.0));
  };
  double dev = tail(omega_max);
  for (int e = 0; e < params.max_extensions && dev >= params.tail_tol; ++e) {
    omega_max *= 2.0;
    dev = tail(omega_max);
  }
  trace.omega_max = omega_max;
  trace.tail_deviation = dev;

  // Uniform samples over the whole line plus a second uniform set over the
  // band where the resolvent pole sweeps the supports.
  std::vector<double> ys;
  const int nb = params.base_points;
  for (int i = 0; i < nb; ++i) ys.push_back(omega_max - 2.0 * omega_max * i / (nb - 1));
  const double band = std::min(omega_max, std::max(tA.max_form(), tB.max_form()));
  for (int i = 1; i + 1 < nb; ++i) ys.push_back(band - 2.0 * band * i / (nb - 1));
  std::sort(ys.begin(), ys.end(), std::greater<>());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  struct Sample {
    double y;
    Evaluated v;
  };
  std::vector<Sample> pts;
  pts.reserve(ys.size());
  for (double y : ys) pts.push_back({y, pair(cplx(delta, y), params.transfer.quad)});

  for (int pass = 0; pass < params.refine_passes; ++pass) {
    std::vector<Sample> next;
    next.reserve(pts.size() * 2);
    bool inserted = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      next.push_back(pts[i]);
      if (i + 1 == pts.size()) break;
      const cplx a = pts[i].v.F;
      const cplx b = pts[i + 1].v.F;
      const bool coarse = std::abs(arg_step(a, b)) > params.max_arg_step ||
                          std::abs(b - a) > 0.5 * std::min(std::abs(a), std::abs(b));
      if (coarse && pts.size() + (next.size() - i) < params.max_points &&
          pts[i].y - pts[i + 1].y > 1e-14 * omega_max) {
        const double y = 0.5 * (pts[i].y + pts[i + 1].y);
        next.push_back({y, pair(cplx(delta, y), params.transfer.quad)});
        inserted = true;
      }
    }
    pts.swap(next);
    if (!inserted) break;
  }

  double total = 0.0;
  trace.min_abs = std::numeric_limits<double>::infinity();
  double err_at_min = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const cplx F = pts[i].v.F;
    trace.omega.push_back(cplx(delta, pts[i].y));
    trace.F.push_back(F);
    trace.sup_h = std::max(trace.sup_h, pts[i].v.h_sum);
    trace.max_error = std::max(trace.max_error, pts[i].v.err);
    if (std::abs(F) < trace.min_abs) {
      trace.min_abs = std::abs(F);
      trace.argmin_omega = trace.omega.back();
      err_at_min = pts[i].v.err;
    }
    if (i > 0) total += arg_step(pts[i - 1].v.F, F);
  }
  // closure through the far field, where F is close to 1
  total += std::arg(1.0 / pts.back().v.F) + std::arg(pts.front().v.F);
  trace.winding = static_cast<int>(std::lround(total / (2.0 * kPi)));
  trace.resolution_limited = trace.min_abs <= err_at_min;

  if (trace.winding != 0 && params.locate_zeros) {
    QuadratureParams tight = params.transfer.quad;
    tight.rel_tol = 1e-9;
    tight.abs_tol = 1e-13;
    auto F = [&](cplx w) { return pair(w, tight).F; };
    auto newton = [&](cplx w) {
      cplx fw = F(w);
      for (int it = 0; it < 60 && std::abs(fw) > 1e-12; ++it) {
        const double h = 1e-7 * std::max(omega_max, std::abs(w));
        const cplx ih(0.0, h);
        const cplx d = (F(w + ih) - F(w - ih)) / (2.0 * ih);
        if (d == 0.0) break;
        const cplx step = fw / d;
        // damped so that the iterate stays in the right half-plane
        double lam = 1.0;
        cplx cand = w;
        cplx fc = fw;
        bool improved = false;
        for (int k = 0; k < 30 && !improved; ++k, lam *= 0.5) {
          cand = w - lam * step;
          if (!(cand.real() > 0.5 * delta)) continue;
          fc = F(cand);
          improved = std::abs(fc) < std::abs(fw);
        }
        if (!improved) break;
        w = cand;
        fw = fc;
      }
      return std::pair{w, fw};
    };

    // Start points: contour heights where F crosses the negative real axis,
    // pushed into the half-plane on a geometric ladder.
    std::vector<double> heights{trace.argmin_omega.imag()};
    for (std::size_t i = 0; i + 1 < trace.F.size(); ++i) {
      const cplx a = trace.F[i];
      const cplx b = trace.F[i + 1];
      if ((a.imag() < 0.0) != (b.imag() < 0.0) && a.real() + b.real() < 0.0) {
        heights.push_back(0.5 * (trace.omega[i].imag() + trace.omega[i + 1].imag()));
      }
    }
    std::vector<std::pair<double, cplx>> starts;
    for (double y : heights) {
      for (double re = 2.0 * delta; re < omega_max; re *= 4.0) {
        const cplx w(re, y);
        starts.emplace_back(std::abs(pair(w, params.transfer.quad).F), w);
      }
    }
    std::sort(starts.begin(), starts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < std::min<std::size_t>(4, starts.size()); ++k) {
      const auto [w, fw] = newton(starts[k].second);
      if (std::abs(fw) <= 1e-6 && w.real() > delta) {
        trace.zero = Witness{P, w, fw, true};
        break;
      }
    }
  }
  return trace;
}

CrossingReport stability_scan(const HomogeneousBackground2D& bgA,
                              const HomogeneousBackground2D& bgB,
                              const CoupledNlsCoefficients& c, const std::vector<Vec2>& P_grid,
                              const ContourParams& params) {
  CrossingReport report;
  std::vector<ContourTrace> traces(P_grid.size());
  parallel_for(
      P_grid.size(),
      [&](std::size_t i) { traces[i] = trace_determinant(bgA, bgB, c, P_grid[i], params); },
      params.workers ? params.workers : default_workers());

  const Witness* best = nullptr;
  Witness global{};
  for (const auto& t : traces) {
    PDiagnostics d;
    d.P = t.P;
    d.winding = t.winding;
    d.min_abs = t.min_abs;
    d.tail_deviation = t.tail_deviation;
    d.omega_max = t.omega_max;
    d.samples = t.omega.size();
    report.per_P.push_back(d);
    report.sup_h = std::max(report.sup_h, t.sup_h);
    if (t.min_abs < report.kappa_min) {
      report.kappa_min = t.min_abs;
      global = Witness{t.P, t.argmin_omega, t.F.empty() ? cplx(1.0) : t.F.front(), false};
      for (std::size_t k = 0; k < t.omega.size(); ++k) {
        if (t.omega[k] == t.argmin_omega) global.F = t.F[k];
      }
      best = &global;
    }
    if (t.resolution_limited) report.resolution_limited = true;
    if (t.winding > 0) {
      report.unstable = true;
      if (t.zero) {
        report.witnesses.push_back(*t.zero);
        report.kappa_min = std::min(report.kappa_min, std::abs(t.zero->F));
      } else {
        report.resolution_limited = true;
        report.witnesses.push_back(Witness{t.P, t.argmin_omega, cplx(t.min_abs), false});
      }
    }
  }
  if (best) report.witnesses.push_back(*best);
  report.bounded = std::isfinite(report.sup_h) && report.sup_h <= params.bound_limit;
  return report;
}

std::vector<Vec2> polar_grid(const std::vector<double>& radii, int angles) {
  if (angles < 1) throw InputError("polar grid: need at least one angle");
  std::vector<Vec2> out;
  for (double r : radii) {
    if (!(r > 0.0)) throw InputError("polar grid: radii must be > 0");
    for (int a = 0; a < angles; ++a) {
      const double th = kPi * a / angles;
      out.push_back({r * std::cos(th), r * std::sin(th)});
    }
  }
  return out;
}

}  // namespace alber
