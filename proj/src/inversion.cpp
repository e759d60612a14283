#include "funk/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "funk/errors.hpp"

namespace funk {

namespace {

void check_range_condition(const HarmonicSpectrum& s, double sup_g,
                           const HarmonicInversionOptions& opt, const char* who) {
  const double cap = s.max_abs();
  const double tol = std::max(opt.odd_rel * cap, opt.odd_abs * (1.0 + sup_g));
  std::vector<int> bad;
  double worst = 0;
  for (int l = 1; l <= s.L; l += 2) {
    double deg = 0;
    for (int m = -l; m <= l; ++m) deg = std::max(deg, std::abs(s.at(l, m)));
    if (deg > tol) {
      bad.push_back(l);
      worst = std::max(worst, deg);
    }
  }
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << who << ": input lies outside the transform range; odd-degree content at l = {";
    for (std::size_t i = 0; i < bad.size() && i < 8; ++i) msg << (i ? ", " : "") << bad[i];
    if (bad.size() > 8) msg << ", ...";
    msg << "} with max |coefficient| " << worst << " exceeding tolerance " << tol;
    throw precondition_error(msg.str());
  }
}

}  // namespace

IdentityVerifier::IdentityVerifier(const GridFunction& f, const IdentityOptions& opt)
    : opt_(opt),
      f_ev_(analyze([&]() -> const GridFunction& {
        const double off = f.odd_fraction();
        if (off > 1e-8)
          throw precondition_error("verify_identity: f must be even (odd fraction " +
                                   std::to_string(off) + ")");
        return f;
      }(), f.grid->max_degree())),
      transformed_(funk(f, opt.transform)) {
  if (opt_.N_t < 8) throw precondition_error("verify_identity: N_t too small");
}

RadialProfile IdentityVerifier::profile_for(const UnitVector3& x) const {
  const int N = opt_.N_t;
  RadialProfile p;
  p.N = N;
  p.left_endpoint_exponent = -0.5;
  p.values.resize(N);
  const int m = opt_.transform.rho_nodes;
#pragma omp parallel for schedule(static)
  for (int i = 1; i <= N; ++i) {
    const double tau = static_cast<double>(i) / N;
    p.values[i - 1] = spherical_mean(f_ev_, x, std::sqrt(tau), m) / std::sqrt(tau);
  }
  return p;
}

double IdentityVerifier::lhs(const UnitVector3& x, double theta) const {
  if (!(theta > 0.0 && theta < M_PI / 2))
    throw precondition_error("verify_identity: theta must lie in (0, pi/2)");
  return generalized_dual(transformed_, x, theta, opt_.transform.rho_nodes);
}

double IdentityVerifier::rhs(const RadialProfile& profile, double theta) const {
  if (!(theta > 0.0 && theta < M_PI / 2))
    throw precondition_error("verify_identity: theta must lie in (0, pi/2)");
  const double c = std::cos(theta);
  return 2.0 * std::sqrt(M_PI) * rl_integral_at(profile, 0.5, c * c);
}

IdentityCheck IdentityVerifier::check(const UnitVector3& x, double theta) const {
  const RadialProfile p = profile_for(x);
  return {lhs(x, theta), rhs(p, theta)};
}

IdentityCheck verify_identity(const GridFunction& f, const UnitVector3& x, double theta,
                              const IdentityOptions& opt) {
  const IdentityVerifier v(f, opt);
  return v.check(x, theta);
}

IdentityCheck verify_identity_symbolic(double n, double theta) {
  if (!(n > 2.0)) throw precondition_error("verify_identity_symbolic: need n > 2");
  if (!(theta > 0.0 && theta < M_PI / 2))
    throw precondition_error("verify_identity_symbolic: theta must lie in (0, pi/2)");
  IdentityCheck out;
  // area of the (n-2)-sphere
  out.lhs = 2.0 * std::pow(M_PI, (n - 1.0) / 2.0) / std::tgamma((n - 1.0) / 2.0);
  // fractional route, term by term: the transform side of the identity for
  // the constant 1 is  2 pi^((n-2)/2) cos^(3-n)(th) (I^((n-2)/2) tau^(-1/2))(cos^2 th)
  // with the fractional integral in closed form.
  const double t = std::cos(theta) * std::cos(theta);
  const double frac = std::sqrt(M_PI) / std::tgamma((n - 1.0) / 2.0) *
                      std::pow(t, (n - 3.0) / 2.0);
  out.rhs = 2.0 * std::pow(M_PI, (n - 2.0) / 2.0) * std::pow(std::cos(theta), 3.0 - n) * frac;
  return out;
}

GridFunction invert_harmonic(const CircleFunction& g, int L,
                             const HarmonicInversionOptions& opt,
                             std::vector<int>* zeroed_degrees) {
  const HarmonicSpectrum& s = g.spectrum();
  if (L < 0) throw precondition_error("invert_harmonic: negative degree");
  if (L > s.L)
    throw precondition_error("invert_harmonic: requested degree beyond the analyzed spectrum");
  check_range_condition(s, g.values().sup_abs(), opt, "invert_harmonic");
  HarmonicSpectrum out(L);
  for (int l = 0; l <= L; l += 2) {
    const double lam = funk_multiplier(l);
    if (std::abs(lam) < opt.multiplier_guard * 2.0 * M_PI) {
      if (zeroed_degrees) zeroed_degrees->push_back(l);
      continue;
    }
    for (int m = -l; m <= l; ++m) out.at(l, m) = s.at(l, m) / lam;
  }
  return synthesize(out, g.values().grid);
}

AbelReconstructionReport invert_abel(const CircleFunction& g, const UnitVector3& x, int N_t,
                                     const AbelOptions& opt) {
  if (N_t < 16) throw precondition_error("invert_abel: N_t too small");
  if (opt.levels < 2) throw precondition_error("invert_abel: need at least 2 levels");
  check_range_condition(g.spectrum(), g.values().sup_abs(), opt.range, "invert_abel");
  const SpectrumEvaluator ev(g.spectrum());
  const double odd = g.odd_fraction();

  AbelReconstructionReport rep;
  rep.x = x;
  rep.t_nodes.resize(N_t);
  rep.dual_profile.resize(N_t);

  RadialProfile h;
  h.N = N_t;
  h.left_endpoint_exponent = 0.0;  // even in the inclination angle, so smooth in t
  h.values.resize(N_t);
  const double scale = 1.0 / (2.0 * std::sqrt(M_PI));
#pragma omp parallel for schedule(static)
  for (int i = 1; i <= N_t; ++i) {
    const double t = static_cast<double>(i) / N_t;
    const double theta = std::acos(std::sqrt(t));
    h.values[i - 1] = scale * generalized_dual(ev, odd, x, theta, opt.rho_nodes);
  }
  for (int i = 0; i < N_t; ++i) {
    rep.t_nodes[i] = static_cast<double>(i + 1) / N_t;
    rep.dual_profile[i] = h.values[i];
  }

  const RadialProfile ft = rl_derivative(h, 0.5);
  rep.fractional_profile = ft.values;

  // extrapolate  sqrt(t) * ft(t)  to t = 1 from nodes at distances ~delta0/2^k
  std::vector<double> deltas, vals;
  int last_idx = -1;
  for (int k = 0; k < opt.levels; ++k) {
    const double target = 1.0 - opt.delta0 / std::pow(2.0, k);
    int idx = static_cast<int>(std::lround(target * N_t));
    idx = std::clamp(idx, 1, N_t);
    if (idx == last_idx) continue;  // coarse grids: skip collapsed levels
    last_idx = idx;
    const double t = static_cast<double>(idx) / N_t;
    deltas.push_back(1.0 - t);
    vals.push_back(std::sqrt(t) * ft.values[idx - 1]);
  }
  if (deltas.size() < 2)
    throw precondition_error("invert_abel: grid too coarse for the endpoint extrapolation");
  rep.deltas = deltas;
  rep.raw_values = vals;

  // Aitken-Neville evaluated at delta = 0 (the node spacing is only
  // approximately geometric once snapped to the grid, so use actual deltas)
  const std::size_t n = deltas.size();
  std::vector<std::vector<double>> T(n);
  for (std::size_t i = 0; i < n; ++i) {
    T[i].resize(i + 1);
    T[i][0] = vals[i];
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      T[i][j] = (deltas[i] * T[i - 1][j - 1] - deltas[i - j] * T[i][j - 1]) /
                (deltas[i] - deltas[i - j]);
  rep.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) rep.diagonal[i] = T[i][i];
  rep.recovered = rep.diagonal.back();
  rep.converged = std::abs(rep.diagonal[n - 1] - rep.diagonal[n - 2]) <=
                  std::max(opt.converge_abs, opt.converge_rel * std::abs(rep.diagonal[n - 1]));
  return rep;
}

}  // namespace funk
