#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alber/interpolation.hpp"

namespace alber {

inline constexpr double kStandardGravity = 9.81;

// Frequency spectrum E(ω): ω in rad/s, E in m²·s.
class FrequencySpectrum {
 public:
  FrequencySpectrum(std::vector<double> omega, std::vector<double> energy,
                    double gravity = kStandardGravity, std::string id = {},
                    std::optional<double> k0 = std::nullopt);

  std::span<const double> omega() const { return omega_; }
  std::span<const double> energy() const { return energy_; }
  double gravity() const { return gravity_; }
  const std::string& id() const { return id_; }
  // Reference wavenumber supplied alongside the data, if any.
  std::optional<double> k0() const { return k0_; }

 private:
  std::vector<double> omega_;
  std::vector<double> energy_;
  double gravity_;
  std::string id_;
  std::optional<double> k0_;
};

// Wavenumber spectrum S(k): k in rad/m, S in m³, with reference wavenumber k0.
class DiscreteSpectrum {
 public:
  DiscreteSpectrum(std::vector<double> k, std::vector<double> density, double k0,
                   std::string id = {});

  std::span<const double> wavenumbers() const { return k_; }
  std::span<const double> densities() const { return s_; }
  double k0() const { return k0_; }
  const std::string& id() const { return id_; }
  std::size_t size() const { return k_.size(); }

  DiscreteSpectrum with_k0(double k0) const { return {k_, s_, k0, id_}; }
  DiscreteSpectrum scaled(double factor) const;
  // Trapezoid rule over the samples.
  double energy() const;
  // Overshoot-free interpolant of the samples on the physical axis; zero
  // outside the sampled support.
  double density_at(double k) const;

 private:
  std::vector<double> k_;
  std::vector<double> s_;
  double k0_;
  std::string id_;
  std::shared_ptr<const MonotoneCubic> interp_;
};

struct SpectralSummary {
  double m0 = 0.0;
  double hs = 0.0;
  double qp = 0.0;
  double delta_omega = 0.0;
  double steepness = 0.0;
  double bfi = 0.0;
};

// Nondimensional spectrum P(k) = k0³ S(k k0), interpolated on the rescaled
// axis. Identically zero outside [lo, hi] and continuous everywhere.
class RescaledSpectrum {
 public:
  // Nodes on the nondimensional axis; values must be nonnegative. If the end
  // values are nonzero a zero node one sample spacing beyond the end is added
  // so that P stays continuous at the support edges.
  RescaledSpectrum(std::vector<double> nodes, std::vector<double> values, double k0 = 1.0);

  double operator()(double k) const;
  double derivative(double k) const;
  // (P(k+X/2) - P(k-X/2)) / X, or P'(k) at X = 0.
  double divided_difference(double X, double k) const;

  double lo() const { return interp_->front(); }
  double hi() const { return interp_->back(); }
  double k0() const { return k0_; }
  std::span<const double> nodes() const { return interp_->nodes(); }
  std::span<const double> values() const { return interp_->values(); }
  double integral() const { return interp_->integral(); }
  bool is_zero() const;
  bool ramped() const { return ramped_; }

  RescaledSpectrum scaled(double factor) const;

 private:
  RescaledSpectrum() = default;

  std::shared_ptr<const MonotoneCubic> interp_;
  double k0_ = 1.0;
  bool ramped_ = false;
};

enum class K0Policy { provided, peak, mean, median };

K0Policy parse_k0_policy(const std::string& name);
std::string to_string(K0Policy policy);

double trapezoid(std::span<const double> x, std::span<const double> y);

// k = ω²/g, S = E dω/dk = E (1/2) sqrt(g/k). k0 is taken from E when present,
// otherwise the peak wavenumber (the midpoint of the range for a zero spectrum).
DiscreteSpectrum frequency_to_wavenumber(const FrequencySpectrum& spectrum);

// Inverse of frequency_to_wavenumber: omega = sqrt(g k), E = S 2 omega / g.
FrequencySpectrum wavenumber_to_frequency(const DiscreteSpectrum& spectrum,
                                          double gravity = kStandardGravity);

SpectralSummary spectral_summary(const FrequencySpectrum& spectrum, double k0);
SpectralSummary spectral_summary(const DiscreteSpectrum& spectrum,
                                 double gravity = kStandardGravity);

// Ties in the peak policy (values within 1e-12 relative of the maximum)
// resolve to the smallest wavenumber.
double select_k0(const DiscreteSpectrum& spectrum, K0Policy policy);
double select_k0(const FrequencySpectrum& spectrum, K0Policy policy);
double select_k0(std::span<const double> k, std::span<const double> density, K0Policy policy,
                 std::optional<double> provided = std::nullopt);

RescaledSpectrum rescale(const DiscreteSpectrum& spectrum, double k0);
inline RescaledSpectrum rescale(const DiscreteSpectrum& spectrum) {
  return rescale(spectrum, spectrum.k0());
}

MonotoneCubic monotone_interpolant(std::vector<double> x, std::vector<double> y);

inline double divided_difference(const RescaledSpectrum& p, double X, double k) {
  return p.divided_difference(X, k);
}

}  // namespace alber
