#include "alber/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "alber/error.hpp"

namespace alber {

namespace {

void check_axis(std::span<const double> x, std::span<const double> y, const char* what) {
  if (x.size() != y.size()) {
    throw InputError(std::string(what) + ": abscissa/density length mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !(x[i] > 0.0)) {
      throw InputError(std::string(what) + ": abscissa must be positive and finite (row " +
                       std::to_string(i) + ")");
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw InputError(std::string(what) + ": abscissae must be strictly increasing (row " +
                       std::to_string(i) + ")");
    }
    if (!std::isfinite(y[i]) || y[i] < 0.0) {
      throw InputError(std::string(what) + ": density must be nonnegative and finite (row " +
                       std::to_string(i) + ")");
    }
  }
}

}  // namespace

FrequencySpectrum::FrequencySpectrum(std::vector<double> omega, std::vector<double> energy,
                                     double gravity, std::string id, std::optional<double> k0)
    : omega_(std::move(omega)),
      energy_(std::move(energy)),
      gravity_(gravity),
      id_(std::move(id)),
      k0_(k0) {
  if (omega_.empty()) throw InputError("frequency spectrum: no samples");
  check_axis(omega_, energy_, "frequency spectrum");
  if (!(gravity_ > 0.0)) throw InputError("frequency spectrum: gravity must be positive");
  if (k0_ && !(*k0_ > 0.0)) throw InputError("frequency spectrum: k0 must be positive");
}

DiscreteSpectrum::DiscreteSpectrum(std::vector<double> k, std::vector<double> density,
                                   double k0, std::string id)
    : k_(std::move(k)), s_(std::move(density)), k0_(k0), id_(std::move(id)) {
  if (k_.size() < 4) throw InputError("wavenumber spectrum: at least 4 samples required");
  check_axis(k_, s_, "wavenumber spectrum");
  if (!std::isfinite(k0_) || !(k0_ > 0.0)) {
    throw InputError("wavenumber spectrum: k0 must be positive");
  }
  interp_ = std::make_shared<const MonotoneCubic>(k_, s_);
}

DiscreteSpectrum DiscreteSpectrum::scaled(double factor) const {
  std::vector<double> s(s_);
  for (double& v : s) v *= factor;
  return {k_, std::move(s), k0_, id_};
}

double DiscreteSpectrum::energy() const { return trapezoid(k_, s_); }

double DiscreteSpectrum::density_at(double k) const {
  if (k < k_.front() || k > k_.back()) return 0.0;
  return std::max(0.0, (*interp_)(k));
}

RescaledSpectrum::RescaledSpectrum(std::vector<double> nodes, std::vector<double> values,
                                   double k0)
    : k0_(k0) {
  if (nodes.size() != values.size() || nodes.size() < 2) {
    throw InputError("rescaled spectrum: need at least two matching samples");
  }
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InputError("rescaled spectrum: values must be nonnegative and finite");
    }
  }
  if (values.front() > 0.0) {
    const double h = nodes[1] - nodes[0];
    const double x = nodes[0] > 0.0 ? std::max(nodes[0] - h, 0.5 * nodes[0]) : nodes[0] - h;
    nodes.insert(nodes.begin(), x);
    values.insert(values.begin(), 0.0);
    ramped_ = true;
  }
  if (values.back() > 0.0) {
    const std::size_t n = nodes.size();
    nodes.push_back(nodes[n - 1] + (nodes[n - 1] - nodes[n - 2]));
    values.push_back(0.0);
    ramped_ = true;
  }
  interp_ = std::make_shared<const MonotoneCubic>(std::move(nodes), std::move(values));
}

double RescaledSpectrum::operator()(double k) const {
  if (k < lo() || k > hi()) return 0.0;
  return (*interp_)(k);
}

double RescaledSpectrum::derivative(double k) const {
  if (k < lo() || k > hi()) return 0.0;
  return interp_->derivative(k);
}

double RescaledSpectrum::divided_difference(double X, double k) const {
  if (X == 0.0) return derivative(k);
  return ((*this)(k + 0.5 * X) - (*this)(k - 0.5 * X)) / X;
}

bool RescaledSpectrum::is_zero() const {
  const auto v = interp_->values();
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

RescaledSpectrum RescaledSpectrum::scaled(double factor) const {
  if (!(factor >= 0.0)) throw InputError("rescaled spectrum: scale factor must be nonnegative");
  std::vector<double> x(interp_->nodes().begin(), interp_->nodes().end());
  std::vector<double> y(interp_->values().begin(), interp_->values().end());
  for (double& v : y) v *= factor;
  RescaledSpectrum out;
  out.interp_ = std::make_shared<const MonotoneCubic>(std::move(x), std::move(y));
  out.k0_ = k0_;
  out.ramped_ = ramped_;
  return out;
}

K0Policy parse_k0_policy(const std::string& name) {
  if (name == "provided") return K0Policy::provided;
  if (name == "peak") return K0Policy::peak;
  if (name == "mean") return K0Policy::mean;
  if (name == "median") return K0Policy::median;
  throw InputError("unknown k0 policy '" + name + "' (expected provided|peak|mean|median)");
}

std::string to_string(K0Policy policy) {
  switch (policy) {
    case K0Policy::provided: return "provided";
    case K0Policy::peak: return "peak";
    case K0Policy::mean: return "mean";
    case K0Policy::median: return "median";
  }
  return "provided";
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    total += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
  }
  return total;
}

DiscreteSpectrum frequency_to_wavenumber(const FrequencySpectrum& spectrum) {
  const double g = spectrum.gravity();
  const auto omega = spectrum.omega();
  const auto energy = spectrum.energy();
  std::vector<double> k(omega.size());
  std::vector<double> s(omega.size());
  for (std::size_t j = 0; j < omega.size(); ++j) {
    k[j] = omega[j] * omega[j] / g;
    s[j] = energy[j] * 0.5 * std::sqrt(g / k[j]);
  }
  double k0 = 0.5 * (k.front() + k.back());  // zero spectrum: no peak to pick
  if (spectrum.k0()) {
    k0 = *spectrum.k0();
  } else if (std::any_of(s.begin(), s.end(), [](double v) { return v != 0.0; })) {
    k0 = select_k0(k, s, K0Policy::peak);
  }
  return {std::move(k), std::move(s), k0, spectrum.id()};
}

FrequencySpectrum wavenumber_to_frequency(const DiscreteSpectrum& spectrum, double gravity) {
  const auto k = spectrum.wavenumbers();
  const auto s = spectrum.densities();
  if (k.front() < 0.0) throw InputError("wavenumber spectrum with k < 0 has no frequency form");
  std::vector<double> omega(k.size()), energy(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    omega[j] = std::sqrt(gravity * k[j]);
    energy[j] = s[j] * 2.0 * omega[j] / gravity;
  }
  return FrequencySpectrum(std::move(omega), std::move(energy), gravity, spectrum.id(),
                           spectrum.k0());
}

SpectralSummary spectral_summary(const DiscreteSpectrum& spectrum, double gravity) {
  return spectral_summary(wavenumber_to_frequency(spectrum, gravity), spectrum.k0());
}

SpectralSummary spectral_summary(const FrequencySpectrum& spectrum, double k0) {
  if (!(k0 > 0.0)) throw InputError("spectral summary: k0 must be positive");
  const auto omega = spectrum.omega();
  const auto energy = spectrum.energy();
  SpectralSummary out;
  out.m0 = trapezoid(omega, energy);
  if (!(out.m0 > 0.0)) return SpectralSummary{};

  std::vector<double> weighted(omega.size());
  for (std::size_t j = 0; j < omega.size(); ++j) weighted[j] = omega[j] * energy[j] * energy[j];
  out.qp = 2.0 / (out.m0 * out.m0) * trapezoid(omega, weighted);
  out.delta_omega = 1.0 / (out.qp * std::sqrt(std::numbers::pi));
  out.hs = 4.0 * std::sqrt(out.m0);
  out.steepness = out.hs * k0 / 2.0;
  out.bfi = out.steepness / (std::numbers::sqrt2 * out.delta_omega);
  return out;
}

double select_k0(std::span<const double> k, std::span<const double> density, K0Policy policy,
                 std::optional<double> provided) {
  if (k.empty() || k.size() != density.size()) {
    throw InputError("select_k0: empty or mismatched spectrum");
  }
  if (policy == K0Policy::provided) {
    if (!provided) throw InputError("select_k0: no k0 provided with the spectrum");
    return *provided;
  }
  const bool zero = std::all_of(density.begin(), density.end(), [](double v) { return v == 0.0; });
  if (zero) throw InputError("select_k0: zero spectrum has no " + to_string(policy) + " wavenumber");

  if (policy == K0Policy::peak) {
    // The interpolant never overshoots, so its maximum sits on a node.
    // Values within 1e-12 of the maximum count as tied so that rounding under
    // rescaling cannot move the peak.
    const double top = *std::max_element(density.begin(), density.end());
    std::size_t best = 0;
    while (density[best] < top * (1.0 - 1e-12)) ++best;
    return k[best];
  }
  if (k.size() < 2) return k.front();

  const MonotoneCubic p(std::vector<double>(k.begin(), k.end()),
                        std::vector<double>(density.begin(), density.end()));
  const double total = p.integral();
  if (policy == K0Policy::mean) return p.first_moment() / total;

  // median: bracket by node, then bisect the exact cumulative integral
  const double half = 0.5 * total;
  double acc = 0.0;
  std::size_t i = 0;
  for (; i + 1 < k.size(); ++i) {
    const double piece = p.integral(k[i], k[i + 1]);
    if (acc + piece >= half) break;
    acc += piece;
  }
  if (i + 1 >= k.size()) return k.back();
  double a = k[i];
  double b = k[i + 1];
  for (int it = 0; it < 200 && b - a > 1e-15 * std::abs(b); ++it) {
    const double m = 0.5 * (a + b);
    if (acc + p.integral(k[i], m) < half) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double select_k0(const DiscreteSpectrum& spectrum, K0Policy policy) {
  return select_k0(spectrum.wavenumbers(), spectrum.densities(), policy, spectrum.k0());
}

double select_k0(const FrequencySpectrum& spectrum, K0Policy policy) {
  const double g = spectrum.gravity();
  std::vector<double> k;
  std::vector<double> s;
  for (std::size_t j = 0; j < spectrum.omega().size(); ++j) {
    const double w = spectrum.omega()[j];
    k.push_back(w * w / g);
    s.push_back(spectrum.energy()[j] * 0.5 * std::sqrt(g / k.back()));
  }
  return select_k0(k, s, policy, spectrum.k0());
}

RescaledSpectrum rescale(const DiscreteSpectrum& spectrum, double k0) {
  if (!(k0 > 0.0)) throw InputError("rescale: k0 must be positive");
  const double k03 = k0 * k0 * k0;
  std::vector<double> x(spectrum.size());
  std::vector<double> y(spectrum.size());
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    x[j] = spectrum.wavenumbers()[j] / k0;
    y[j] = k03 * spectrum.densities()[j];
  }
  return {std::move(x), std::move(y), k0};
}

MonotoneCubic monotone_interpolant(std::vector<double> x, std::vector<double> y) {
  return {std::move(x), std::move(y)};
}

}  // namespace alber
