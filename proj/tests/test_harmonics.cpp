#include <cmath>
#include <memory>
#include <random>

#include "doctest.h"
#include "funk/errors.hpp"
#include "funk/harmonics.hpp"
#include "funk/reference.hpp"
#include "funk/sphere.hpp"
#include "oracles.hpp"

using namespace funk;
using oracle::pi;

namespace {

std::vector<UnitVector3> scatter_points(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<UnitVector3> out;
  while (static_cast<int>(out.size()) < n) {
    const double x = u(rng), y = u(rng), z = u(rng);
    if (x * x + y * y + z * z > 1e-3) out.emplace_back(x, y, z);
  }
  return out;
}

HarmonicSpectrum random_spectrum(int L, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HarmonicSpectrum s(L);
  for (auto& c : s.c) c = u(rng);
  return s;
}

}  // namespace

TEST_CASE("reference Y_lm agrees with the closed-form table through degree 4") {
  for (const auto& p : scatter_points(40, 11)) {
    for (int l = 0; l <= 4; ++l)
      for (int m = -l; m <= l; ++m) {
        const double want = oracle::ylm(l, m, p.x, p.y, p.z);
        CHECK(ref::eval_ylm(l, m, p) == doctest::Approx(want).epsilon(1e-12));
      }
  }
  // poles included
  CHECK(ref::eval_ylm(2, 0, UnitVector3(0, 0, 1)) ==
        doctest::Approx(std::sqrt(5 / (4 * pi))).epsilon(1e-14));
  CHECK(ref::eval_ylm(3, 2, UnitVector3(0, 0, -1)) == doctest::Approx(0.0));
}

TEST_CASE("basis is orthonormal under the grid quadrature") {
  auto g = std::make_shared<const SphereGrid>(16, 32);
  std::vector<std::pair<int, int>> lm;
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) lm.emplace_back(l, m);
  for (const auto& [l1, m1] : lm)
    for (const auto& [l2, m2] : lm) {
      std::vector<double> prod(g->size());
      for (std::size_t i = 0; i < g->size(); ++i) {
        const auto& p = g->node(i);
        prod[i] = oracle::ylm(l1, m1, p.x, p.y, p.z) * oracle::ylm(l2, m2, p.x, p.y, p.z);
      }
      const double want = (l1 == l2 && m1 == m2) ? 1.0 : 0.0;
      CHECK(std::abs(g->integrate(prod) - want) < 1e-13);
    }
}

TEST_CASE("analyze recovers hand-built coefficients") {
  auto g = std::make_shared<const SphereGrid>(8, 16);
  const GridFunction f = sample(g, [](const UnitVector3& p) {
    return 2.0 + 3.0 * oracle::ylm(4, -2, p.x, p.y, p.z);
  });
  const HarmonicSpectrum s = analyze(f, 4);
  CHECK(s.at(0, 0) == doctest::Approx(2.0 * std::sqrt(4 * pi)).epsilon(1e-13));
  CHECK(s.at(4, -2) == doctest::Approx(3.0).epsilon(1e-13));
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m)
      if (!(l == 0 && m == 0) && !(l == 4 && m == -2)) CHECK(std::abs(s.at(l, m)) < 1e-12);
  CHECK_THROWS_AS(analyze(f, 8), precondition_error);  // grid resolves only degree 7
}

TEST_CASE("production analyze/synthesize match the per-coefficient reference") {
  auto g = std::make_shared<const SphereGrid>(12, 24);
  const HarmonicSpectrum s = random_spectrum(8, 21);
  const GridFunction f = synthesize(s, g);
  const GridFunction f_ref = ref::synthesize(s, g);
  for (std::size_t i = 0; i < g->size(); ++i)
    CHECK(f.values[i] == doctest::Approx(f_ref.values[i]).epsilon(1e-12));

  const HarmonicSpectrum back = analyze(f, 8);
  const HarmonicSpectrum back_ref = ref::analyze(f, 8);
  for (std::size_t k = 0; k < s.c.size(); ++k) {
    CHECK(back.c[k] == doctest::Approx(s.c[k]).epsilon(1e-12));
    CHECK(back.c[k] == doctest::Approx(back_ref.c[k]).epsilon(1e-12));
  }
}

TEST_CASE("analyze is exact on band-limited data across grid shapes") {
  for (auto dims : {std::pair{7, 14}, {9, 32}, {16, 18}}) {
    auto g = std::make_shared<const SphereGrid>(dims.first, dims.second);
    const int L = std::min(6, g->max_degree());
    const HarmonicSpectrum s = random_spectrum(L, 77);
    const HarmonicSpectrum back = analyze(synthesize(s, g), L);
    for (std::size_t k = 0; k < s.c.size(); ++k)
      CHECK(back.c[k] == doctest::Approx(s.c[k]).epsilon(1e-11));
  }
}

TEST_CASE("SpectrumEvaluator equals the reference pointwise synthesis") {
  const HarmonicSpectrum s = random_spectrum(10, 31);
  const SpectrumEvaluator ev(s);
  CHECK(ev.effective_degree() == 10);
  for (const auto& p : scatter_points(25, 32))
    CHECK(ev(p) == doctest::Approx(ref::eval_point(s, p)).epsilon(1e-12));
  // poles exercise the sin(theta) ~ 0 branch
  for (const auto& p : {UnitVector3(0, 0, 1), UnitVector3(0, 0, -1)})
    CHECK(ev(p) == doctest::Approx(ref::eval_point(s, p)).epsilon(1e-12));
}

TEST_CASE("SpectrumEvaluator drops negligible coefficients") {
  HarmonicSpectrum s(20);
  s.at(3, 1) = 1.0;
  s.at(20, 17) = 1e-16;  // below the relative threshold
  const SpectrumEvaluator ev(s);
  CHECK(ev.effective_degree() == 3);
  const UnitVector3 p(0.3, 0.4, 0.86);
  CHECK(ev(p) == doctest::Approx(ref::eval_ylm(3, 1, p)).epsilon(1e-12));

  const SpectrumEvaluator zero{HarmonicSpectrum(5)};
  CHECK(zero.effective_degree() == -1);
  CHECK(zero(p) == 0.0);
}

TEST_CASE("funk_multiplier: closed values and the P_l(0) law") {
  CHECK(funk_multiplier(0) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(funk_multiplier(2) == doctest::Approx(-pi).epsilon(1e-15));
  CHECK(funk_multiplier(4) == doctest::Approx(3 * pi / 4).epsilon(1e-15));
  for (int l = 1; l <= 19; l += 2) CHECK(funk_multiplier(l) == 0.0);
  for (int l = 0; l <= 20; l += 2)
    CHECK(funk_multiplier(l) ==
          doctest::Approx(2 * pi * oracle::legendre_zero(l)).epsilon(1e-14));
}

TEST_CASE("spectrum bookkeeping helpers") {
  HarmonicSpectrum s(5);
  s.at(4, -3) = 2.5;
  s.at(5, 5) = -0.75;
  CHECK(s.c[HarmonicSpectrum::index(4, -3)] == 2.5);
  CHECK(s.max_abs() == 2.5);
  CHECK(s.max_abs_odd() == 0.75);
}
