#include "alber/singular_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "alber/error.hpp"

namespace alber {

void QuadratureParams::validate() const {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InputError("quadrature: compl_tol must be > 0");
  if (!(rel_tol > 0.0)) throw InputError("quadrature: rel_tol must be > 0");
  if (!(abs_tol > 0.0)) throw InputError("quadrature: abs_tol must be > 0");
  if (initial_panels < 2 || initial_panels % 2 != 0) {
    throw InputError("quadrature: initial panel count must be even and >= 2");
  }
  if (max_levels < 0 || max_levels > 20) throw InputError("quadrature: max levels out of range");
}

std::vector<double> panel_edges(const SupportedFunction& u, cplx z, const QuadratureParams& params) {
  const double lo = u.lo;
  const double hi = u.hi;
  const double width = hi - lo;
  std::vector<double> edges;
  edges.reserve(params.initial_panels + u.breakpoints.size() + 128);
  for (int i = 0; i <= params.initial_panels; ++i) {
    edges.push_back(lo + width * i / params.initial_panels);
  }
  for (double b : u.breakpoints) {
    if (b > lo && b < hi) edges.push_back(b);
  }

  const double x0 = z.real();
  const double scale = std::max({std::abs(lo), std::abs(hi), width});
  const double eta = std::max(std::abs(z.imag()), 1e-10 * width);
  if (x0 > lo - width && x0 < hi + width) {
    if (x0 > lo && x0 < hi) edges.push_back(x0);
    for (double d = eta; d < width; d *= 2.0) {
      if (x0 - d > lo && x0 - d < hi) edges.push_back(x0 - d);
      if (x0 + d > lo && x0 + d < hi) edges.push_back(x0 + d);
    }
  }

  std::sort(edges.begin(), edges.end());
  const double merge = 1e-14 * scale;
  std::vector<double> out;
  out.reserve(edges.size());
  for (double e : edges) {
    if (out.empty() || e - out.back() > merge) out.push_back(e);
  }
  if (out.back() < hi) out.back() = hi;
  return out;
}

namespace {

struct Sums {
  cplx coarse{};
  cplx fine{};
};

// Fine grid has 3m subintervals per panel, coarse grid m on the same panel;
// coarse nodes are every third fine node.
Sums panel_sums(const SupportedFunction& u, cplx z, double a, double b, int m,
                std::vector<cplx>& buffer) {
  const int nf = 3 * m;
  const double hf = (b - a) / nf;
  buffer.resize(nf + 1);
  for (int i = 0; i <= nf; ++i) {
    const double s = i == nf ? b : a + i * hf;
    buffer[i] = u.f(s) / (z - s);
  }
  cplx fine = buffer[0] + buffer[nf];
  for (int i = 1; i < nf; ++i) fine += (i % 2 == 1 ? 4.0 : 2.0) * buffer[i];
  cplx coarse = buffer[0] + buffer[nf];
  for (int j = 1; j < m; ++j) coarse += (j % 2 == 1 ? 4.0 : 2.0) * buffer[3 * j];
  return {coarse * (3.0 * hf / 3.0), fine * (hf / 3.0)};
}

}  // namespace

TransformSample cauchy_integral(const SupportedFunction& u, cplx z, const QuadratureParams& params) {
  params.validate();
  TransformSample out;
  out.t = z.real();
  if (u.empty()) return out;
  if (z.imag() == 0.0) throw InputError("cauchy integral: evaluation point on the real axis");

  const std::vector<double> edges = panel_edges(u, z, params);
  const int panels = static_cast<int>(edges.size()) - 1;
  std::vector<cplx> buffer;
  cplx value{};
  double abs_err = 0.0;
  for (int level = 0; level <= params.max_levels; ++level) {
    const int m = 2 << level;
    cplx coarse{};
    cplx fine{};
    for (int p = 0; p < panels; ++p) {
      const Sums s = panel_sums(u, z, edges[p], edges[p + 1], m, buffer);
      coarse += s.coarse;
      fine += s.fine;
    }
    value = fine / std::numbers::pi;
    abs_err = std::abs(fine - coarse) / std::numbers::pi;
    const double rel_err = std::abs(value) > 0.0 ? abs_err / std::abs(value) : 0.0;
    out.value = value;
    out.est_error = abs_err;
    out.panels_used = panels * 3 * m;
    if (rel_err <= params.rel_tol || abs_err <= params.abs_tol) return out;
  }
  throw QuadratureFailure("quadrature refinement exhausted at t = " + std::to_string(z.real()),
                          z.real(), value, abs_err);
}

TransformSample regularized_transform(const SupportedFunction& u, double t,
                                      const QuadratureParams& params) {
  return cauchy_integral(u, cplx(t, -params.eta), params);
}

std::pair<double, double> truncation_window(std::pair<double, double> support, double, double,
                                            double) {
  return support;
}

cplx simpson_cauchy(const SupportedFunction& u, cplx z, int intervals) {
  if (intervals < 2 || intervals % 2 != 0) {
    throw InputError("simpson: interval count must be even and >= 2");
  }
  if (u.empty()) return {};
  const double h = (u.hi - u.lo) / intervals;
  cplx sum{};
  for (int i = 0; i <= intervals; ++i) {
    const double s = i == intervals ? u.hi : u.lo + i * h;
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * u.f(s) / (z - s);
  }
  return sum * (h / 3.0) / std::numbers::pi;
}

}  // namespace alber
