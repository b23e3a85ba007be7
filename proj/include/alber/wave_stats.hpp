#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace alber {

struct CrestRecord {
  std::vector<double> crests;   // max over each complete positive excursion
  std::vector<double> troughs;  // min over each complete negative excursion
  std::vector<double> heights;  // crest minus the following trough
  std::vector<double> crossings;  // fractional sample index of each sign change
};

// Excursions are delimited by sign changes (crossing instants refined
// linearly); partial excursions at the record ends are dropped. Samples equal
// to zero do not split an excursion.
CrestRecord zero_crossing_crests(std::span<const double> eta,
                                 const std::function<void(const std::string&)>& warn = {});

// Mean of the ceil(n/3) largest heights. Throws InputError for n < 3.
double significant_wave_height(std::span<const double> heights);

double crest_exceedance(std::span<const double> crests, double threshold);

// Central-moment accumulator with pairwise merge.
class MomentAccumulator {
 public:
  void add(double x);
  void add(std::span<const double> xs) {
    for (double x : xs) add(x);
  }
  void merge(const MomentAccumulator& other);
  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ ? m2_ / n_ : 0.0; }
  // m4 / m2^2 - 3; throws InputError for zero variance or n < 4.
  double excess_kurtosis() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0, m2_ = 0.0, m3_ = 0.0, m4_ = 0.0;
};

double excess_kurtosis(std::span<const double> samples);

// Pearson correlation of mid-ranks.
double spearman_rank(std::span<const double> x, std::span<const double> y);
std::vector<double> mid_ranks(std::span<const double> v);

struct IsserlisResult {
  std::complex<double> lhs;  // empirical E[|u_a|^2 u_a conj(u_b)]
  std::complex<double> rhs;  // 2 R(a,a) R(a,b)
  double discrepancy = 0.0;  // |lhs - rhs| / (2 R(a,a) sqrt(R(a,a) R(b,b)))
  double relative = 0.0;     // |lhs - rhs| / |rhs|, 0 when rhs = 0
  std::uint64_t samples = 0;
};

// Circularly symmetric complex Gaussian pair with E|u_a|^2 = var_a,
// E|u_b|^2 = var_b and E[u_a conj(u_b)] = rho sqrt(var_a var_b).
IsserlisResult isserlis_closure_test(std::uint64_t n_samples, std::complex<double> rho,
                                     std::uint64_t seed, double var_a = 1.0, double var_b = 1.0);

}  // namespace alber
