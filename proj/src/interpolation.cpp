#include "alber/interpolation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "alber/error.hpp"

namespace alber {

namespace {

int sign(double v) { return (v > 0.0) - (v < 0.0); }

double end_slope(double h0, double h1, double del0, double del1) {
  double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
  if (sign(d) != sign(del0)) {
    d = 0.0;
  } else if (sign(del0) != sign(del1) && std::abs(d) > std::abs(3.0 * del0)) {
    d = 3.0 * del0;
  }
  return d;
}

// Antiderivative of the Hermite basis combination on the unit interval.
double hermite_antiderivative(double t, double y0, double m0, double y1, double m1) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double t4 = t3 * t;
  return (0.5 * t4 - t3 + t) * y0 + (0.25 * t4 - 2.0 / 3.0 * t3 + 0.5 * t2) * m0 +
         (-0.5 * t4 + t3) * y1 + (0.25 * t4 - t3 / 3.0) * m1;
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size()) {
    throw InputError("monotone interpolant: abscissa/ordinate length mismatch");
  }
  if (x_.size() < 2) {
    throw InputError("monotone interpolant: at least two samples required");
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
      throw InputError("monotone interpolant: non-finite sample at index " + std::to_string(i));
    }
    if (i > 0 && !(x_[i] > x_[i - 1])) {
      throw InputError("monotone interpolant: abscissae must be strictly increasing (index " +
                       std::to_string(i) + ")");
    }
  }

  const std::size_t n = x_.size();
  std::vector<double> h(n - 1);
  std::vector<double> del(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x_[k + 1] - x_[k];
    del[k] = (y_[k + 1] - y_[k]) / h[k];
  }

  d_.assign(n, 0.0);
  if (n == 2) {
    d_[0] = d_[1] = del[0];
    return;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (del[k - 1] * del[k] > 0.0) {
      const double w1 = 2.0 * h[k] + h[k - 1];
      const double w2 = h[k] + 2.0 * h[k - 1];
      d_[k] = (w1 + w2) / (w1 / del[k - 1] + w2 / del[k]);
    }
  }
  d_[0] = end_slope(h[0], h[1], del[0], del[1]);
  d_[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
}

std::size_t MonotoneCubic::interval(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y_[i] + (t3 - 2.0 * t2 + t) * h * d_[i] +
         (-2.0 * t3 + 3.0 * t2) * y_[i + 1] + (t3 - t2) * h * d_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  return ((6.0 * t2 - 6.0 * t) * y_[i] + (-6.0 * t2 + 6.0 * t) * y_[i + 1]) / h +
         (3.0 * t2 - 4.0 * t + 1.0) * d_[i] + (3.0 * t2 - 2.0 * t) * d_[i + 1];
}

double MonotoneCubic::integral(double a, double b) const {
  double sgn = 1.0;
  if (b < a) {
    std::swap(a, b);
    sgn = -1.0;
  }
  a = std::max(a, front());
  b = std::min(b, back());
  if (!(b > a)) return 0.0;

  double total = 0.0;
  for (std::size_t i = interval(a); i + 1 < x_.size() && x_[i] < b; ++i) {
    const double h = x_[i + 1] - x_[i];
    const double lo = std::max(a, x_[i]);
    const double hi = std::min(b, x_[i + 1]);
    if (!(hi > lo)) continue;
    const double m0 = h * d_[i];
    const double m1 = h * d_[i + 1];
    total += h * (hermite_antiderivative((hi - x_[i]) / h, y_[i], m0, y_[i + 1], m1) -
                  hermite_antiderivative((lo - x_[i]) / h, y_[i], m0, y_[i + 1], m1));
  }
  return sgn * total;
}

double MonotoneCubic::first_moment() const {
  static constexpr std::array<double, 3> nodes{-0.7745966692414834, 0.0, 0.7745966692414834};
  static constexpr std::array<double, 3> weights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    const double mid = 0.5 * (x_[i] + x_[i + 1]);
    const double half = 0.5 * (x_[i + 1] - x_[i]);
    for (std::size_t q = 0; q < 3; ++q) {
      const double x = mid + half * nodes[q];
      total += half * weights[q] * x * (*this)(x);
    }
  }
  return total;
}

}  // namespace alber
