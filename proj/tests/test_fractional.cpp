#include <cmath>

#include "doctest.h"
#include "funk/errors.hpp"
#include "funk/fractional.hpp"
#include "oracles.hpp"

using namespace funk;
using oracle::pi;

namespace {

// sup over nodes of |profile - closed form|, skipping the first `skip` and
// last `skip` nodes when the comparison only holds in the interior
double sup_err(const RadialProfile& p, const std::function<double(double)>& want,
               int skip_lo = 0, int skip_hi = 0) {
  double e = 0;
  for (int i = skip_lo; i < p.N - skip_hi; ++i)
    e = std::max(e, std::abs(p.values[i] - want(p.t(i))));
  return e;
}

}  // namespace

TEST_CASE("half integral of the constant: exact at every node") {
  const RadialProfile one = sample_profile(256, 0.0, [](double) { return 1.0; });
  const RadialProfile I = rl_integral(one, 0.5);
  CHECK(I.left_endpoint_exponent == doctest::Approx(0.5));
  CHECK(sup_err(I, [](double t) { return 2 * std::sqrt(t / pi); }) < 1e-14);
}

TEST_CASE("half integral of t^(-1/2): exact constant sqrt(pi)") {
  const RadialProfile p =
      sample_profile(200, -0.5, [](double t) { return 1.0 / std::sqrt(t); });
  const RadialProfile I = rl_integral(p, 0.5);
  CHECK(I.left_endpoint_exponent == doctest::Approx(0.0));
  CHECK(sup_err(I, [](double) { return std::sqrt(pi); }) < 1e-13);
}

TEST_CASE("profiles with linear smooth part are reproduced exactly") {
  for (double gamma : {-0.5, 0.0, 0.7}) {
    for (double a : {0.3, 0.5, 1.0, 1.7}) {
      const RadialProfile p = sample_profile(128, gamma, [&](double t) {
        return std::pow(t, gamma) * (2.0 + 3.0 * t);
      });
      const RadialProfile I = rl_integral(p, a);
      auto want = [&](double t) {
        return 2 * oracle::rl_power(gamma, a, t) + 3 * oracle::rl_power(gamma + 1, a, t);
      };
      CHECK(sup_err(I, want) < 1e-12);
    }
  }
}

TEST_CASE("pointwise evaluation agrees off the grid") {
  const RadialProfile p = sample_profile(128, -0.5, [](double t) {
    return (1.0 - 0.25 * t) / std::sqrt(t);
  });
  auto want = [](double t) {
    return oracle::rl_power(-0.5, 0.5, t) - 0.25 * oracle::rl_power(0.5, 0.5, t);
  };
  for (double t : {0.0031, 0.2571, 0.5, 0.77773, 1.0})
    CHECK(rl_integral_at(p, 0.5, t) == doctest::Approx(want(t)).epsilon(1e-12));
  // inside the first cell (t < 1/128)
  CHECK(rl_integral_at(p, 0.5, 0.004) == doctest::Approx(want(0.004)).epsilon(1e-12));
  CHECK_THROWS_AS(rl_integral_at(p, 0.5, 0.0), precondition_error);
  CHECK_THROWS_AS(rl_integral_at(p, 0.5, 1.0001), precondition_error);
}

TEST_CASE("second-order convergence, clean asymptotics") {
  // smooth part s^3 has vanishing curvature at the singular endpoint, so the
  // h^2 term dominates from the start and doubling ratios sit right at 4
  auto runner = [](int N) {
    const RadialProfile p = sample_profile(N, -0.5, [](double t) {
      return t * t * std::sqrt(t);
    });
    double emax = 0;
    for (double t : {0.5, 0.75, 1.0})
      emax = std::max(emax, std::abs(rl_integral_at(p, 0.5, t) -
                                     oracle::rl_power(2.5, 0.5, t)));
    return emax;
  };
  const double e1 = runner(128), e2 = runner(256), e3 = runner(512);
  CHECK(e1 / e2 > 3.5);
  CHECK(e2 / e3 > 3.5);
  CHECK(e3 < 1e-5);
}

TEST_CASE("convergence on an oscillatory singular profile") {
  // curvature of the smooth part at the singular endpoint feeds an
  // opposite-sign h^(5/2) transient through the first cell, so adjacent
  // doubling ratios wobble; certify decay across a 16x refinement instead
  auto runner = [](int N) {
    const RadialProfile p = sample_profile(N, -0.5, [](double t) {
      return std::cos(2 * t) / std::sqrt(t);
    });
    // the substitution s = t sin^2(u) absorbs both endpoint singularities:
    // I^(1/2)[cos(2s)/sqrt(s)](t) = (2/sqrt(pi)) integral_0^(pi/2) cos(2t sin^2 u) du
    double emax = 0;
    for (double t : {0.5, 0.75, 1.0}) {
      const double want = (2.0 / std::sqrt(pi)) * oracle::simpson(
          [&](double u) {
            const double si = std::sin(u);
            return std::cos(2 * t * si * si);
          }, 0.0, pi / 2, 4000);
      emax = std::max(emax, std::abs(rl_integral_at(p, 0.5, t) - want));
    }
    return emax;
  };
  const double coarse = runner(64), fine = runner(1024);
  CHECK(coarse / fine > 25.0);  // a first-order rule would give 16
  CHECK(fine < 1e-6);
}

TEST_CASE("semigroup property through the exponent bookkeeping") {
  const RadialProfile p = sample_profile(256, 0.0, [](double t) { return 1.0 + t; });
  const RadialProfile half = rl_integral(p, 0.5);
  const RadialProfile full = rl_integral(half, 0.5);
  // I^1 of 1 + t is t + t^2/2
  CHECK(sup_err(full, [](double t) { return t + 0.5 * t * t; }) < 1e-13);

  // I^0.3 of 1 + t has linear smooth part, so the composition stays exact
  const RadialProfile split_a = rl_integral(rl_integral(p, 0.3), 0.7);
  CHECK(sup_err(split_a, [](double t) { return t + 0.5 * t * t; }) < 1e-12);
}

TEST_CASE("half derivative closed forms") {
  // D^(1/2) sqrt(t) = sqrt(pi)/2
  const RadialProfile root = sample_profile(512, 0.5, [](double t) { return std::sqrt(t); });
  const RadialProfile d = rl_derivative(root, 0.5);
  CHECK(d.left_endpoint_exponent == doctest::Approx(0.0));
  CHECK(sup_err(d, [](double) { return std::sqrt(pi) / 2; }) < 1e-11);

  // D^(1/2) t = 2 sqrt(t / pi); the inner profile goes like t^(3/2), whose
  // high derivatives blow up at 0, so compare away from the left edge
  const RadialProfile lin = sample_profile(512, 0.0, [](double t) { return t; });
  const RadialProfile dl = rl_derivative(lin, 0.5);
  CHECK(sup_err(dl, [](double t) { return 2 * std::sqrt(t / pi); }, 200, 0) < 1e-9);

  CHECK_THROWS_AS(rl_derivative(lin, 1.0), precondition_error);
  CHECK_THROWS_AS(rl_derivative(lin, 0.0), precondition_error);
  const RadialProfile tiny = sample_profile(4, 0.0, [](double) { return 1.0; });
  CHECK_THROWS_AS(rl_derivative(tiny, 0.5), precondition_error);
}

TEST_CASE("derivative inverts the integral away from the left edge") {
  const RadialProfile p = sample_profile(512, 0.0, [](double t) {
    return 1.0 + 0.5 * std::sin(3 * t);
  });
  const RadialProfile round = rl_derivative(rl_integral(p, 0.5), 0.5);
  double emax = 0;
  for (int i = 32; i < 512 - 2; ++i)
    emax = std::max(emax, std::abs(round.values[i] - p.values[i]));
  CHECK(emax < 1e-4);
}

TEST_CASE("order and size preconditions") {
  const RadialProfile p = sample_profile(32, 0.0, [](double t) { return t; });
  CHECK_THROWS_AS(rl_integral(p, 0.0), precondition_error);
  CHECK_THROWS_AS(rl_integral(p, 2.5), precondition_error);
  CHECK_NOTHROW(rl_integral(p, 2.0));
  RadialProfile bad = p;
  bad.N = 31;  // size mismatch
  CHECK_THROWS_AS(rl_integral(bad, 0.5), precondition_error);
  RadialProfile sing = p;
  sing.left_endpoint_exponent = -1.0;
  CHECK_THROWS_AS(rl_integral(sing, 0.5), precondition_error);
}
