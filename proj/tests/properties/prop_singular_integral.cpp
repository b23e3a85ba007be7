#include <cmath>

#include "../support/fixtures.hpp"
#include "alber/singular_integral.hpp"

using namespace alber;
using namespace alber::testing;

namespace {

// (1 - ((s - c) / w)^2)^4 on [c - w, c + w]: polynomial inside its support.
SupportedFunction random_bump(Rng& rng) {
  const double c = rng.uniform(-2.0, 2.0);
  const double w = rng.uniform(0.2, 2.0);
  const double a = rng.uniform(0.1, 5.0);
  SupportedFunction u;
  u.lo = c - w;
  u.hi = c + w;
  u.f = [=](double s) {
    const double r = (s - c) / w;
    if (std::abs(r) >= 1.0) return 0.0;
    const double q = 1.0 - r * r;
    return a * q * q * q * q;
  };
  return u;
}

}  // namespace

ALBER_PROPERTY("singular_integral", "transform is linear within twice the error bound", 100) {
  const SupportedFunction u = random_bump(rng);
  const SupportedFunction v = random_bump(rng);
  const double a = rng.uniform(-2.0, 2.0);
  const double b = rng.uniform(-2.0, 2.0);
  SupportedFunction w;
  w.lo = std::min(u.lo, v.lo);
  w.hi = std::max(u.hi, v.hi);
  w.f = [&](double s) { return a * u.f(s) + b * v.f(s); };
  w.breakpoints = {u.lo, u.hi, v.lo, v.hi};
  const QuadratureParams q;
  const double t = rng.uniform(w.lo - 0.5, w.hi + 0.5);
  const TransformSample Iu = regularized_transform(u, t, q);
  const TransformSample Iv = regularized_transform(v, t, q);
  const TransformSample Iw = regularized_transform(w, t, q);
  const double diff = std::abs(Iw.value - (a * Iu.value + b * Iv.value));
  const double bound = 2.0 * (std::abs(a) * Iu.est_error + std::abs(b) * Iv.est_error + Iw.est_error);
  require(diff <= bound + 1e-14, msg("linearity defect ", diff, " exceeds ", bound, " at t = ", t));
}

ALBER_PROPERTY("singular_integral", "result is stable under shrinking eta tenfold", 100) {
  const SupportedFunction u = random_bump(rng);
  const double t = rng.uniform(u.lo + 0.05 * (u.hi - u.lo), u.hi - 0.05 * (u.hi - u.lo));
  QuadratureParams q;
  const cplx a = regularized_transform(u, t, q).value;
  q.eta /= 10.0;
  const cplx b = regularized_transform(u, t, q).value;
  require(std::abs(a - b) <= 1e-2 * std::abs(a),
          msg("|I_eta - I_eta/10| = ", std::abs(a - b), " vs |I| = ", std::abs(a)));
}

ALBER_PROPERTY("singular_integral", "Simpson error drops at least eightfold per halving", 100) {
  const SupportedFunction u = random_bump(rng);
  const double gap = rng.uniform(0.5, 3.0);
  const double t = rng.chance(0.5) ? u.hi + gap : u.lo - gap;
  const cplx z(t, -1e-4);
  const cplx exact = simpson_cauchy(u, z, 8192);
  const int N = 8 << rng.integer(0, 2);
  const double e1 = std::abs(simpson_cauchy(u, z, N) - exact);
  const double e2 = std::abs(simpson_cauchy(u, z, 2 * N) - exact);
  require(e2 * 8.0 <= e1 || e1 < 1e-13 * std::abs(exact),
          msg("error ratio ", e1 / e2, " at N = ", N));
}

ALBER_PROPERTY("singular_integral", "flipping the sign of eta conjugates the result", 100) {
  const SupportedFunction u = random_bump(rng);
  const double t = rng.uniform(u.lo - 0.5, u.hi + 0.5);
  const double eta = rng.log_uniform(1e-5, 1e-2);
  const QuadratureParams q;
  const cplx below = cauchy_integral(u, cplx(t, -eta), q).value;
  const cplx above = cauchy_integral(u, cplx(t, eta), q).value;
  require(std::abs(above - std::conj(below)) <= 1e-10 * std::max(1.0, std::abs(below)),
          msg("conjugation defect ", std::abs(above - std::conj(below))));
}
