#pragma once

#include <span>
#include <vector>

namespace alber {

// Shape-preserving piecewise cubic Hermite interpolant (Fritsch-Carlson
// slopes with the Fritsch-Butland weighted harmonic mean, as in MATLAB's
// pchip). On every interval the curve stays inside the box spanned by the two
// bounding samples, so nonnegative data gives a nonnegative interpolant and
// local extrema are attained at the nodes. The result is C1.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  // Requires at least two samples with strictly increasing abscissae.
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  // Outside [front, back] the end cubics are extended.
  double operator()(double x) const;
  double derivative(double x) const;

  // Exact integral of the interpolant over [a, b] ∩ [front, back].
  double integral(double a, double b) const;
  double integral() const { return integral(front(), back()); }
  // Exact integral of x * p(x) over the node range (3-point Gauss per interval).
  double first_moment() const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }
  std::span<const double> nodes() const { return x_; }
  std::span<const double> values() const { return y_; }
  std::span<const double> slopes() const { return d_; }
  bool empty() const { return x_.empty(); }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> d_;
};

}  // namespace alber
