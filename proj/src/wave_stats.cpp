#include "alber/wave_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "alber/error.hpp"

namespace alber {

CrestRecord zero_crossing_crests(std::span<const double> eta,
                                 const std::function<void(const std::string&)>& warn) {
  CrestRecord rec;
  struct Run {
    int sign;
    double extreme;
  };
  std::vector<Run> runs;
  int last_sign = 0;
  std::size_t last_index = 0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    const double v = eta[i];
    if (!std::isfinite(v)) throw InputError("crests: non-finite sample at index " + std::to_string(i));
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (s != last_sign) {
      if (last_sign != 0) {
        const double a = eta[last_index];
        rec.crossings.push_back(last_index + a / (a - v) * (i - last_index));
      }
      runs.push_back({s, v});
      last_sign = s;
    } else if (s > 0) {
      runs.back().extreme = std::max(runs.back().extreme, v);
    } else {
      runs.back().extreme = std::min(runs.back().extreme, v);
    }
    last_index = i;
  }
  if (runs.size() < 3) {
    if (warn) warn("series has fewer than two zero crossings; no complete waves");
    return rec;
  }
  for (std::size_t k = 1; k + 1 < runs.size(); ++k) {
    if (runs[k].sign > 0) {
      rec.crests.push_back(runs[k].extreme);
      if (k + 2 < runs.size()) rec.heights.push_back(runs[k].extreme - runs[k + 1].extreme);
    } else {
      rec.troughs.push_back(runs[k].extreme);
    }
  }
  return rec;
}

double significant_wave_height(std::span<const double> heights) {
  if (heights.size() < 3) throw InputError("Hs: at least 3 wave heights required");
  std::vector<double> h(heights.begin(), heights.end());
  const std::size_t top = (h.size() + 2) / 3;
  std::nth_element(h.begin(), h.begin() + (top - 1), h.end(), std::greater<>());
  return std::accumulate(h.begin(), h.begin() + top, 0.0) / static_cast<double>(top);
}

double crest_exceedance(std::span<const double> crests, double threshold) {
  if (crests.empty()) throw InputError("crest exceedance: empty record");
  const auto n = std::count_if(crests.begin(), crests.end(), [&](double c) { return c > threshold; });
  return static_cast<double>(n) / static_cast<double>(crests.size());
}

void MomentAccumulator::add(double x) {
  const std::uint64_t n1 = n_;
  ++n_;
  const double n = static_cast<double>(n_);
  const double delta = x - mean_;
  const double dn = delta / n;
  const double dn2 = dn * dn;
  const double t1 = delta * dn * static_cast<double>(n1);
  mean_ += dn;
  m4_ += t1 * dn2 * (n * n - 3.0 * n + 3.0) + 6.0 * dn2 * m2_ - 4.0 * dn * m3_;
  m3_ += t1 * dn * (n - 2.0) - 3.0 * dn * m2_;
  m2_ += t1;
}

void MomentAccumulator::merge(const MomentAccumulator& o) {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(o.n_);
  const double n = na + nb;
  const double d = o.mean_ - mean_;
  const double d2 = d * d;
  const double m2 = m2_ + o.m2_ + d2 * na * nb / n;
  const double m3 = m3_ + o.m3_ + d * d2 * na * nb * (na - nb) / (n * n) +
                    3.0 * d * (na * o.m2_ - nb * m2_) / n;
  const double m4 = m4_ + o.m4_ + d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                    6.0 * d2 * (na * na * o.m2_ + nb * nb * m2_) / (n * n) +
                    4.0 * d * (na * o.m3_ - nb * m3_) / n;
  n_ += o.n_;
  mean_ += d * nb / n;
  m2_ = m2;
  m3_ = m3;
  m4_ = m4;
}

double MomentAccumulator::excess_kurtosis() const {
  if (n_ < 4) throw InputError("kurtosis: at least 4 samples required");
  if (!(m2_ > 0.0)) throw InputError("kurtosis: zero variance");
  return static_cast<double>(n_) * m4_ / (m2_ * m2_) - 3.0;
}

double excess_kurtosis(std::span<const double> samples) {
  MomentAccumulator acc;
  acc.add(samples);
  return acc.excess_kurtosis();
}

std::vector<double> mid_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = rank;
    i = j + 1;
  }
  return r;
}

double spearman_rank(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("spearman: length mismatch");
  if (x.size() < 3) throw InputError("spearman: at least 3 pairs required");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) throw InputError("spearman: non-finite value");
  }
  const auto rx = mid_ranks(x);
  const auto ry = mid_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw InputError("spearman: constant input");
  return sxy / std::sqrt(sxx * syy);
}

IsserlisResult isserlis_closure_test(std::uint64_t n_samples, std::complex<double> rho,
                                     std::uint64_t seed, double var_a, double var_b) {
  if (!(std::abs(rho) <= 1.0)) throw InputError("isserlis: |rho| must be <= 1");
  if (!(var_a > 0.0) || !(var_b > 0.0)) throw InputError("isserlis: variances must be > 0");
  if (n_samples == 0) throw InputError("isserlis: need at least one sample");
  using c = std::complex<double>;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double sa = std::sqrt(var_a);
  const double sb = std::sqrt(var_b);
  const double tail = std::sqrt(std::max(0.0, 1.0 - std::norm(rho)));
  c sum{};
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    const c w1(normal(rng), normal(rng));
    const c w2(normal(rng), normal(rng));
    const c ua = sa * w1;
    const c ub = sb * (std::conj(rho) * w1 + tail * w2);
    sum += std::norm(ua) * ua * std::conj(ub);
  }
  IsserlisResult r;
  r.samples = n_samples;
  r.lhs = sum / static_cast<double>(n_samples);
  const c R_ab = rho * sa * sb;
  r.rhs = 2.0 * var_a * R_ab;
  r.discrepancy = std::abs(r.lhs - r.rhs) / (2.0 * var_a * sa * sb);
  r.relative = std::abs(r.rhs) > 0.0 ? std::abs(r.lhs - r.rhs) / std::abs(r.rhs) : 0.0;
  return r;
}

}  // namespace alber
