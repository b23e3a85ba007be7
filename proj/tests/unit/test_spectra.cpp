#include <cmath>

#include "../support/fixtures.hpp"
#include "alber/error.hpp"
#include "alber/spectra.hpp"
#include "doctest.h"

using namespace alber;
using namespace alber::testing;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

FrequencySpectrum rectangle(double lo, double hi, double level, int n = 101) {
  return FrequencySpectrum(linspace(lo, hi, n), std::vector<double>(n, level));
}

}  // namespace

TEST_SUITE("spectra_core") {
  TEST_CASE("zero frequency spectrum converts to zero wavenumber spectrum") {
    const auto S = frequency_to_wavenumber(rectangle(0.5, 1.5, 0.0, 11));
    for (double s : S.densities()) CHECK(s == 0.0);
  }

  TEST_CASE("omega = 1 maps to k = 1/g") {
    const FrequencySpectrum E({1.0, 1.1, 1.2, 1.3}, {1.0, 1.0, 1.0, 1.0});
    const auto S = frequency_to_wavenumber(E);
    CHECK(S.wavenumbers()[0] == doctest::Approx(0.10194).epsilon(1e-4));
    CHECK(S.wavenumbers()[0] == 1.0 / 9.81);
  }

  TEST_CASE("rectangular spectrum conserves energy") {
    const auto S = frequency_to_wavenumber(rectangle(1.0, 1.1, 1.0));
    CHECK(std::abs(S.energy() - 0.1) <= 1e-6);
  }

  TEST_CASE("wavenumber to frequency inverts the conversion") {
    Rng rng(3);
    const FrequencySpectrum E = random_frequency_spectrum(rng);
    const auto back = wavenumber_to_frequency(frequency_to_wavenumber(E));
    for (std::size_t i = 0; i < E.omega().size(); ++i) {
      CHECK(back.omega()[i] == doctest::Approx(E.omega()[i]).epsilon(1e-14));
      CHECK(back.energy()[i] == doctest::Approx(E.energy()[i]).epsilon(1e-13));
    }
  }

  TEST_CASE("invalid spectra are rejected") {
    CHECK_THROWS_AS(FrequencySpectrum({0.0, 1.0, 2.0, 3.0}, {1, 1, 1, 1}), InputError);
    CHECK_THROWS_AS(FrequencySpectrum({1.0, 2.0, 3.0}, {1, -1, 1}), InputError);
    CHECK_THROWS_AS(DiscreteSpectrum({1.0, 1.0, 2.0, 3.0}, {1, 1, 1, 1}, 1.0), InputError);
    CHECK_THROWS_AS(DiscreteSpectrum({1.0, 2.0, 3.0}, {1, 1, 1}, 1.0), InputError);
    CHECK_THROWS_AS(DiscreteSpectrum({1.0, 2.0, 3.0, 4.0}, {1, 1, 1, 1}, 0.0), InputError);
    CHECK_THROWS_AS(monotone_interpolant({0.0, 1.0, 1.0}, {0.0, 1.0, 2.0}), InputError);
  }

  TEST_CASE("rectangle has Qp = 2 mean omega / width") {
    const double wbar = 1.2, width = 0.2;
    const auto s = spectral_summary(rectangle(wbar - width / 2, wbar + width / 2, 3.0), 0.15);
    CHECK(s.qp == doctest::Approx(2.0 * wbar / width).epsilon(1e-10));
    CHECK(s.m0 == doctest::Approx(3.0 * width).epsilon(1e-12));
    CHECK(s.hs == doctest::Approx(4.0 * std::sqrt(s.m0)).epsilon(1e-14));
  }

  TEST_CASE("Qp is unchanged when the spectrum doubles") {
    Rng rng(5);
    const FrequencySpectrum E = random_frequency_spectrum(rng);
    std::vector<double> e2(E.energy().begin(), E.energy().end());
    for (auto& v : e2) v *= 2.0;
    const FrequencySpectrum E2({E.omega().begin(), E.omega().end()}, e2);
    const auto a = spectral_summary(E, 0.2);
    const auto b = spectral_summary(E2, 0.2);
    CHECK(b.m0 == doctest::Approx(2.0 * a.m0).epsilon(1e-14));
    CHECK(b.qp == doctest::Approx(a.qp).epsilon(1e-13));
  }

  TEST_CASE("zero spectrum gives an all-zero summary") {
    const auto s = spectral_summary(rectangle(1.0, 2.0, 0.0, 11), 0.2);
    CHECK(s.m0 == 0.0);
    CHECK(s.hs == 0.0);
    CHECK(s.qp == 0.0);
    CHECK(s.steepness == 0.0);
    CHECK(s.bfi == 0.0);
  }

  TEST_CASE("symmetric spectrum has equal peak, mean and median") {
    const auto S = gaussian_spectrum(1e-3, 0.1, 121, 6.0, 0.05);
    const double peak = select_k0(S, K0Policy::peak);
    CHECK(peak == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(select_k0(S, K0Policy::mean) == doctest::Approx(peak).epsilon(1e-10));
    CHECK(select_k0(S, K0Policy::median) == doctest::Approx(peak).epsilon(1e-8));
  }

  TEST_CASE("provided k0 passes through verbatim") {
    const DiscreteSpectrum S({0.01, 0.02, 0.03, 0.04}, {0, 1, 2, 0}, 0.0277);
    CHECK(select_k0(S, K0Policy::provided) == 0.0277);
  }

  TEST_CASE("bimodal equal peaks: mean 2, peak at the smaller k") {
    const auto k = linspace(0.5, 3.5, 301);
    std::vector<double> s(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      s[i] = std::exp(-0.5 * std::pow((k[i] - 1.0) / 0.05, 2)) +
             std::exp(-0.5 * std::pow((k[i] - 3.0) / 0.05, 2));
    }
    const DiscreteSpectrum S(k, s, 1.0);
    CHECK(select_k0(S, K0Policy::peak) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(select_k0(S, K0Policy::mean) == doctest::Approx(2.0).epsilon(1e-9));
  }

  TEST_CASE("zero spectrum has no peak") {
    const DiscreteSpectrum S({1.0, 2.0, 3.0, 4.0}, {0, 0, 0, 0}, 1.0);
    CHECK_THROWS_AS(select_k0(S, K0Policy::peak), InputError);
    CHECK_THROWS_AS(select_k0(S, K0Policy::mean), InputError);
    CHECK(select_k0(S, K0Policy::provided) == 1.0);
  }

  TEST_CASE("k0 = 1 makes P the interpolated S") {
    const auto S = gaussian_spectrum(1e-3, 0.1, 41);
    const auto P = rescale(S, 1.0);
    for (double k : {0.75, 0.9, 1.0, 1.05, 1.3}) CHECK(P(k) == doctest::Approx(S.density_at(k)).epsilon(1e-14));
  }

  TEST_CASE("narrow peak at k0 rescales to a peak at 1") {
    const auto S = gaussian_spectrum(1e-3, 0.01, 81, 6.0, 0.04);
    const auto P = rescale(S);
    CHECK(P(1.0) > P(0.99));
    CHECK(P(1.0) > P(1.01));
  }

  TEST_CASE("constant S with k0 = 2 gives P = 8c") {
    const double c = 0.3;
    const DiscreteSpectrum S(linspace(1.0, 3.0, 9), std::vector<double>(9, c), 2.0);
    const auto P = rescale(S);
    for (double k : {0.5, 0.8, 1.0, 1.3, 1.5}) CHECK(P(k) == doctest::Approx(8.0 * c).epsilon(1e-14));
    CHECK(P(0.3) == 0.0);
    CHECK(P(2.0) == 0.0);
  }

  TEST_CASE("interpolant reproduces linear data") {
    const MonotoneCubic f = monotone_interpolant({0.0, 0.5, 2.0, 3.0}, {0.0, 1.0, 4.0, 6.0});
    for (double x = 0.0; x <= 3.0; x += 0.01) CHECK(f(x) == doctest::Approx(2.0 * x).epsilon(1e-12));
  }

  TEST_CASE("hat samples peak at the node without overshoot") {
    const MonotoneCubic f = monotone_interpolant({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    double top = -1.0, low = 1.0;
    for (int i = 0; i <= 20000; ++i) {
      top = std::max(top, f(i * 1e-4));
      low = std::min(low, f(i * 1e-4));
    }
    CHECK(top == 1.0);
    CHECK(low >= 0.0);
  }

  TEST_CASE("divided difference of k^2 is 2k") {
    const auto k = linspace(0.2, 2.0, 3601);
    std::vector<double> v(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) v[i] = k[i] * k[i];
    const RescaledSpectrum P(k, v);
    for (double X : {1e-3, 0.05, 0.4}) {
      for (double x : {0.8, 1.0, 1.4}) CHECK(P.divided_difference(X, x) == doctest::Approx(2.0 * x).epsilon(1e-6));
    }
  }

  TEST_CASE("divided difference converges to the derivative at second order") {
    const auto P = gaussian_rescaled(1e-3, 0.2, 2001);
    const double k = 1.1;
    const double d = P.divided_difference(0.0, k);
    CHECK(d == P.derivative(k));
    const double e1 = std::abs(P.divided_difference(0.04, k) - d);
    const double e2 = std::abs(P.divided_difference(0.02, k) - d);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
  }

  TEST_CASE("divided difference vanishes at the centre of an even spectrum") {
    const auto P = gaussian_rescaled(1e-3, 0.1, 121);
    for (double X : {1e-4, 0.01, 0.3}) CHECK(std::abs(P.divided_difference(X, 1.0)) < 1e-12);
  }

  TEST_CASE("K0 policy names round-trip") {
    for (auto p : {K0Policy::provided, K0Policy::peak, K0Policy::mean, K0Policy::median}) {
      CHECK(parse_k0_policy(to_string(p)) == p);
    }
    CHECK_THROWS_AS(parse_k0_policy("mode"), InputError);
  }
}
