// Acceptance gate: one PASS/FAIL line per check, exit code = number of
// failures.  Checks run at the library's default resolution (64 x 128 grid,
// bandlimit 63, 512 radial nodes) unless a check is about resolution itself.

#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "funk/convex.hpp"
#include "funk/errors.hpp"
#include "funk/fractional.hpp"
#include "funk/harmonics.hpp"
#include "funk/inversion.hpp"
#include "funk/sphere.hpp"
#include "funk/transforms.hpp"
#include "oracles.hpp"

using namespace funk;

namespace {

constexpr double pi = 3.14159265358979323846;

int failures = 0;

void report(bool ok, int id, const char* name, const std::string& detail) {
  std::printf("%s  %2d  %-36s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

UnitVector3 random_direction(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const double x = n(rng), y = n(rng), z = n(rng);
    if (x * x + y * y + z * z > 1e-6) return UnitVector3(x, y, z);
  }
}

HarmonicSpectrum random_even_spectrum(int L, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HarmonicSpectrum s(L);
  for (int l = 0; l <= L; l += 2)
    for (int m = -l; m <= l; ++m) s.at(l, m) = u(rng);
  return s;
}

SupportBody random_body(std::mt19937& rng, bool odd_only) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double amp = 0.12;
  for (int attempt = 0; attempt < 40; ++attempt, amp *= 0.5) {
    HarmonicSpectrum s(5);
    s.at(0, 0) = std::sqrt(4 * pi);
    for (int l = odd_only ? 3 : 2; l <= 5; odd_only ? l += 2 : ++l)
      for (int m = -l; m <= l; ++m) s.at(l, m) = amp * u(rng);
    if (!odd_only) s.at(2, 1) += 0.05;
    try {
      return make_harmonic_body(s);
    } catch (const precondition_error&) {
    }
  }
  throw std::runtime_error("could not draw a valid support body");
}

// ---------------------------------------------------------------------------

void check_constant_calibration(std::shared_ptr<const SphereGrid> g) {
  const CircleFunction m1 = funk::funk(sample(g, [](const UnitVector3&) { return 1.0; }));
  double e_funk = 0;
  for (double v : m1.values().values) e_funk = std::max(e_funk, std::abs(v - 2 * pi));

  const double c = 3.7;
  const CircleFunction phi(sample(g, [&](const UnitVector3&) { return c; }));
  const GridFunction back = dual_funk(phi);
  double e_dual = 0;
  for (double v : back.values) e_dual = std::max(e_dual, std::abs(v - c));

  report(e_funk <= 1e-12 && e_dual <= 1e-12, 1, "constant calibration",
         fmt("max|M1-2pi|=%.2e  max|M*c-c|=%.2e", e_funk, e_dual));
}

void check_odd_annihilation(std::shared_ptr<const SphereGrid> g) {
  double worst = 0;
  for (int l = 1; l <= 15; l += 2)
    for (int m = -l; m <= l; ++m) {
      HarmonicSpectrum s(l);
      s.at(l, m) = 1.0;
      worst = std::max(worst, funk::funk(synthesize(s, g)).values().sup_abs());
    }
  report(worst <= 1e-9, 2, "odd-degree annihilation",
         fmt("max|M Y_lm|=%.2e over odd l<=15, all m", worst));
}

void check_multiplier_spectrum(std::shared_ptr<const SphereGrid> g) {
  double worst = 0;
  for (int l = 0; l <= 16; l += 2) {
    const double measured = multiplier_measure(g, MultiplierKind::Funk, l);
    const double want = 2 * pi * oracle::legendre_zero(l);
    worst = std::max(worst, std::abs(measured - want));
  }
  report(worst <= 1e-8, 3, "multiplier spectrum vs recurrence",
         fmt("max|measured - 2pi P_l(0)|=%.2e, even l<=16", worst));
}

void check_identity_sweep(std::shared_ptr<const SphereGrid> g) {
  std::mt19937 rng(4242);
  double worst_rel = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const GridFunction f = synthesize(random_even_spectrum(8, rng), g);
    const IdentityVerifier v(f);
    double worst = 0, scale = 0;
    for (int k = 0; k < 5; ++k) {
      const UnitVector3 x = random_direction(rng);
      const RadialProfile prof = v.profile_for(x);
      for (int j = 0; j < 16; ++j) {
        const double theta = 0.06 + j * (1.51 - 0.06) / 15.0;
        const double lhs = v.lhs(x, theta), rhs = v.rhs(prof, theta);
        worst = std::max(worst, std::abs(lhs - rhs));
        scale = std::max(scale, std::abs(lhs));
      }
    }
    worst_rel = std::max(worst_rel, worst / scale);
  }

  const GridFunction one = sample(g, [](const UnitVector3&) { return 1.0; });
  const IdentityCheck chk = verify_identity(one, UnitVector3(0.3, -0.4, 0.87), 0.8);
  const double e_const = std::max(std::abs(chk.lhs - 2 * pi), std::abs(chk.rhs - 2 * pi));

  report(worst_rel <= 1e-3 && e_const <= 1e-8, 4, "dual/fractional identity sweep",
         fmt("max rel err=%.2e (5 f x 5 x x 16 theta), const err=%.2e", worst_rel, e_const));
}

void check_harmonic_round_trip(std::shared_ptr<const SphereGrid> g) {
  std::mt19937 rng(515);
  const GridFunction f = synthesize(random_even_spectrum(8, rng), g);
  const GridFunction rec = invert_harmonic(funk::funk(f), g->max_degree());
  std::vector<double> d2(f.values.size()), f2(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double d = rec.values[i] - f.values[i];
    d2[i] = d * d;
    f2[i] = f.values[i] * f.values[i];
  }
  const double rel = std::sqrt(g->integrate(d2) / g->integrate(f2));
  report(rel <= 1e-8, 5, "harmonic inversion round trip", fmt("relative L2 error=%.2e", rel));
}

void check_abel_recovery(std::shared_ptr<const SphereGrid> g) {
  HarmonicSpectrum s(4);
  s.at(0, 0) = std::sqrt(4 * pi);
  s.at(2, 0) = 0.3;
  s.at(4, 0) = 0.2;
  const GridFunction f = synthesize(s, g);
  const SpectrumEvaluator fev(s);
  const CircleFunction t = funk::funk(f);

  std::mt19937 rng(2026);
  double e_coarse = 0, e_fine = 0;
  bool all_converged = true;
  for (int k = 0; k < 10; ++k) {
    const UnitVector3 x = random_direction(rng);
    const AbelReconstructionReport r512 = invert_abel(t, x, 512);
    const AbelReconstructionReport r1024 = invert_abel(t, x, 1024);
    all_converged = all_converged && r512.converged && r1024.converged;
    e_coarse = std::max(e_coarse, std::abs(r512.recovered - fev(x)));
    e_fine = std::max(e_fine, std::abs(r1024.recovered - fev(x)));
  }
  const double order = std::log2(e_coarse / e_fine);
  report(e_coarse <= 1e-2 && order >= 1.0 && all_converged, 6,
         "abel pipeline recovery and order",
         fmt("max err=%.2e at N_t=512, observed order=%.2f", e_coarse, order));
}

void check_fractional_calculus() {
  const int N = 512;
  RadialProfile p;
  p.N = N;
  p.left_endpoint_exponent = 0.0;
  p.values.assign(N, 1.0);
  const RadialProfile I = rl_integral(p, 0.5);
  double e_int = 0;
  for (int i = 0; i < N; ++i)
    e_int = std::max(e_int, std::abs(I.values[i] - 2 * std::sqrt(I.t(i) / pi)));

  RadialProfile q;
  q.N = N;
  q.left_endpoint_exponent = 0.0;
  q.values.resize(N);
  for (int i = 0; i < N; ++i) q.values[i] = 1.0 + 0.5 * std::sin(3 * q.t(i));
  const RadialProfile round = rl_derivative(rl_integral(q, 0.5), 0.5);
  double e_round = 0;
  for (int i = 32; i < N - 2; ++i)
    e_round = std::max(e_round, std::abs(round.values[i] - q.values[i]));

  report(e_int <= 1e-6 && e_round <= 1e-4, 7, "fractional integral and round trip",
         fmt("max|I[1]-2sqrt(t/pi)|=%.2e  interior D I round trip=%.2e", e_int, e_round));
}

void check_orbit_average(std::shared_ptr<const SphereGrid> g) {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0;
  for (int k = 0; k < 10; ++k) {
    HarmonicSpectrum s(9);
    for (int l = 0; l <= 9; ++l)
      for (int m = -l; m <= l; ++m) s.at(l, m) = u(rng);
    const GridFunction F = synthesize(s, g);
    const auto [lhs, rhs] = k_average_identity_check(F, random_direction(rng));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  report(worst <= 1e-10, 8, "orbit average vs spherical mean",
         fmt("max|lhs-rhs|=%.2e over 10 random (F, z)", worst));
}

void check_circumference_routes() {
  std::mt19937 rng(99);
  std::vector<SupportBody> bodies;
  bodies.push_back(make_ball(1.0));
  bodies.push_back(make_ellipsoid(1.0, 1.0, 2.0));
  for (int k = 0; k < 5; ++k) bodies.push_back(random_body(rng, false));

  double worst = 0;
  for (const SupportBody& b : bodies)
    for (int k = 0; k < 20; ++k) {
      const UnitVector3 w = random_direction(rng);
      worst = std::max(worst, std::abs(circumference_funk(b, w) - circumference_direct(b, w)));
    }
  report(worst <= 1e-7, 9, "circumference, two routes",
         fmt("max route difference=%.2e over 7 bodies x 20 directions", worst));
}

void check_minkowski_verdicts() {
  std::mt19937 rng(123);
  int disagreements = 0, cw_confirmed = 0, generic_nonconst = 0;
  double worst_barbier = 0;
  for (int k = 0; k < 50; ++k) {
    const bool constant_width = (k % 2 == 0);
    const SupportBody b = random_body(rng, constant_width);
    const MinkowskiReport rep = minkowski_check(b);
    if (rep.constant_width != rep.constant_circumference) ++disagreements;
    if (constant_width) {
      if (rep.constant_width && rep.constant_circumference) ++cw_confirmed;
      for (std::size_t i = 0; i < rep.table.directions.size(); ++i)
        worst_barbier = std::max(
            worst_barbier,
            std::abs(rep.table.circumference[i] - pi * rep.table.width[i]));
    } else if (!rep.constant_width && !rep.constant_circumference) {
      ++generic_nonconst;
    }
  }
  report(disagreements == 0 && cw_confirmed == 25 && generic_nonconst == 25 &&
             worst_barbier <= 1e-7,
         10, "width/circumference verdicts",
         fmt("0 disagreements in 50 bodies, max|U-pi*B|=%.2e on constant width",
             worst_barbier));
}

void check_cosine_limit() {
  const double alphas[] = {0.2, 0.1, 0.05, 0.01};
  double r[4];
  for (int i = 0; i < 4; ++i)
    r[i] = cosine_multiplier(2, alphas[i]) / cosine_multiplier(0, alphas[i]);
  const bool monotone = r[0] > r[1] && r[1] > r[2] && r[2] > r[3];
  const double final_err = std::abs(r[3] + 0.5);
  report(monotone && final_err <= 5e-2, 11, "cosine multiplier ratio limit",
         fmt("c2/c0 at alpha=0.01: %.4f (err %.2e), decreasing toward -1/2", r[3], final_err));
}

void check_symbolic_dimension() {
  double worst = 0;
  for (double n : {3.0, 4.0, 5.0}) {
    const double want = 2 * std::pow(pi, (n - 1) / 2) / std::tgamma((n - 1) / 2);
    for (double theta : {0.3, 0.9, 1.4}) {
      const IdentityCheck chk = verify_identity_symbolic(n, theta);
      worst = std::max(worst, std::abs(chk.lhs - want));
      worst = std::max(worst, std::abs(chk.rhs - want));
    }
  }
  report(worst <= 1e-12, 12, "symbolic dimension identity",
         fmt("max deviation from sphere areas=%.2e for n=3,4,5", worst));
}

void run(int id, const char* name, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(false, id, name, std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  auto g = std::make_shared<const SphereGrid>(64, 128);

  run(1, "constant calibration", [&] { check_constant_calibration(g); });
  run(2, "odd-degree annihilation", [&] { check_odd_annihilation(g); });
  run(3, "multiplier spectrum vs recurrence", [&] { check_multiplier_spectrum(g); });
  run(4, "dual/fractional identity sweep", [&] { check_identity_sweep(g); });
  run(5, "harmonic inversion round trip", [&] { check_harmonic_round_trip(g); });
  run(6, "abel pipeline recovery and order", [&] { check_abel_recovery(g); });
  run(7, "fractional integral and round trip", [&] { check_fractional_calculus(); });
  run(8, "orbit average vs spherical mean", [&] { check_orbit_average(g); });
  run(9, "circumference, two routes", [&] { check_circumference_routes(); });
  run(10, "width/circumference verdicts", [&] { check_minkowski_verdicts(); });
  run(11, "cosine multiplier ratio limit", [&] { check_cosine_limit(); });
  run(12, "symbolic dimension identity", [&] { check_symbolic_dimension(); });

  std::printf("%d of 12 checks passed\n", 12 - failures);
  return failures;
}
