#include "funk/transforms.hpp"

#include <cmath>
#include <vector>

#include "funk/errors.hpp"
#include "funk/quadrature.hpp"

namespace funk {

namespace {

struct AngleTable {
  std::vector<double> c, s;
  explicit AngleTable(int m) : c(m), s(m) {
    for (int j = 0; j < m; ++j) {
      c[j] = std::cos(2.0 * M_PI * j / m);
      s[j] = std::sin(2.0 * M_PI * j / m);
    }
  }
};

inline UnitVector3 frame_point(const std::array<double, 3>& u, const std::array<double, 3>& v,
                               double ca, double sa) {
  UnitVector3 p;
  p.x = u[0] * ca + v[0] * sa;
  p.y = u[1] * ca + v[1] * sa;
  p.z = u[2] * ca + v[2] * sa;
  return p;
}

void require_even(double odd_fraction, const char* who) {
  if (odd_fraction > 1e-6)
    throw precondition_error(std::string(who) +
                             ": input has odd content (fraction " +
                             std::to_string(odd_fraction) + "); an even function is required");
}

}  // namespace

CircleFunction::CircleFunction(GridFunction values)
    : values_(std::move(values)),
      spectrum_(analyze(values_, values_.grid->max_degree())),
      odd_fraction_(values_.odd_fraction()) {}

CircleFunction funk(const GridFunction& f, const TransformOptions& opt) {
  const SphereGrid& g = *f.grid;
  const int m = opt.circle_nodes;
  if (m < 4) throw precondition_error("funk: circle_nodes too small");
  const SpectrumEvaluator ev(analyze(f, g.max_degree()));
  const AngleTable ang(m);
  const double w = 2.0 * M_PI / m;
  GridFunction out(f.grid);
  const std::size_t n = g.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    const Rotation r = rotation_taking_north_to(g.node(k));
    const auto u = r.column(0);
    const auto v = r.column(1);
    double acc = 0;
    for (int j = 0; j < m; ++j) acc += ev(frame_point(u, v, ang.c[j], ang.s[j]));
    out.values[k] = acc * w;
  }
  return CircleFunction(std::move(out));
}

GridFunction dual_funk(const CircleFunction& phi, const TransformOptions& opt) {
  const SphereGrid& g = *phi.values().grid;
  const int m = opt.rho_nodes;
  if (m < 4) throw precondition_error("dual_funk: rho_nodes too small");
  require_even(phi.odd_fraction(), "dual_funk");
  const SpectrumEvaluator ev(phi.spectrum());
  const AngleTable ang(m);
  GridFunction out(phi.values().grid);
  const std::size_t n = g.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    const Rotation r = rotation_taking_north_to(g.node(k));
    const auto u = r.column(0);
    const auto v = r.column(1);
    double acc = 0;
    // poles of the circles through the node: the perpendicular great circle
    for (int j = 0; j < m; ++j) acc += ev(frame_point(u, v, -ang.c[j], -ang.s[j]));
    out.values[k] = acc / m;
  }
  return out;
}

double spherical_mean(const SpectrumEvaluator& f, const UnitVector3& theta_dir, double t,
                      int m) {
  if (m < 1) throw precondition_error("spherical_mean: m must be positive");
  if (!(std::abs(t) <= 1.0)) throw precondition_error("spherical_mean: need |t| <= 1");
  const Rotation r = rotation_taking_north_to(theta_dir);
  const auto u = r.column(0);
  const auto v = r.column(1);
  const double rad = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
  double acc = 0;
  for (int j = 0; j < m; ++j) {
    const double a = 2.0 * M_PI * j / m;
    const double ca = rad * std::cos(a), sa = rad * std::sin(a);
    UnitVector3 p;
    p.x = t * theta_dir.x + u[0] * ca + v[0] * sa;
    p.y = t * theta_dir.y + u[1] * ca + v[1] * sa;
    p.z = t * theta_dir.z + u[2] * ca + v[2] * sa;
    acc += f(p);
  }
  return acc / m;
}

double spherical_mean(const GridFunction& f, const UnitVector3& theta_dir, double t, int m) {
  const SpectrumEvaluator ev(analyze(f, f.grid->max_degree()));
  return spherical_mean(ev, theta_dir, t, m);
}

namespace {

double generalized_funk_impl(const SpectrumEvaluator& f, const GreatCircle& xi,
                             double theta_ang, int m) {
  if (m < 1) throw precondition_error("generalized_funk: m must be positive");
  if (!(theta_ang >= 0.0 && theta_ang <= M_PI / 2))
    throw precondition_error("generalized_funk: theta outside [0, pi/2]");
  const Rotation r = rotation_taking_north_to(xi.pole);
  const auto u = r.column(0);
  const auto v = r.column(1);
  const UnitVector3& p = xi.pole;
  const double ct = std::cos(theta_ang), st = std::sin(theta_ang);
  // orbit of x_theta = e_1 cos + e_3 sin under rotations about e_3, carried
  // to the circle's frame
  double acc = 0;
  for (int j = 0; j < m; ++j) {
    const double a = 2.0 * M_PI * j / m;
    const double ca = ct * std::cos(a), sa = ct * std::sin(a);
    UnitVector3 q;
    q.x = u[0] * ca + v[0] * sa + st * p.x;
    q.y = u[1] * ca + v[1] * sa + st * p.y;
    q.z = u[2] * ca + v[2] * sa + st * p.z;
    acc += f(q);
  }
  return acc / m;
}

double generalized_dual_impl(const SpectrumEvaluator& phi, const UnitVector3& x,
                             double theta_ang, int m) {
  if (m < 1) throw precondition_error("generalized_dual: m must be positive");
  if (!(theta_ang >= 0.0 && theta_ang <= M_PI / 2))
    throw precondition_error("generalized_dual: theta outside [0, pi/2]");
  const Rotation r = rotation_taking_north_to(x);
  const auto u = r.column(0);
  const auto v = r.column(1);
  const double ct = std::cos(theta_ang), st = std::sin(theta_ang);
  // poles r_x Rz(a) q_theta with q_theta = (-cos th, 0, sin th)
  double acc = 0;
  for (int j = 0; j < m; ++j) {
    const double a = 2.0 * M_PI * j / m;
    const double ca = -ct * std::cos(a), sa = -ct * std::sin(a);
    UnitVector3 q;
    q.x = u[0] * ca + v[0] * sa + st * x.x;
    q.y = u[1] * ca + v[1] * sa + st * x.y;
    q.z = u[2] * ca + v[2] * sa + st * x.z;
    acc += phi(q);
  }
  return acc / m;
}

}  // namespace

double generalized_funk(const SpectrumEvaluator& f, const GreatCircle& xi, double theta_ang,
                        int m) {
  return generalized_funk_impl(f, xi, theta_ang, m);
}

double generalized_funk(const GridFunction& f, const GreatCircle& xi, double theta_ang, int m) {
  const SpectrumEvaluator ev(analyze(f, f.grid->max_degree()));
  return generalized_funk_impl(ev, xi, theta_ang, m);
}

double generalized_dual(const SpectrumEvaluator& phi_ev, double phi_odd_fraction,
                        const UnitVector3& x, double theta_ang, int m) {
  require_even(phi_odd_fraction, "generalized_dual");
  return generalized_dual_impl(phi_ev, x, theta_ang, m);
}

double generalized_dual(const CircleFunction& phi, const UnitVector3& x, double theta_ang,
                        int m) {
  require_even(phi.odd_fraction(), "generalized_dual");
  const SpectrumEvaluator ev(phi.spectrum());
  return generalized_dual_impl(ev, x, theta_ang, m);
}

std::pair<double, double> k_average_identity_check(const GridFunction& F,
                                                   const UnitVector3& z, int m) {
  if (m < 1) throw precondition_error("k_average_identity_check: m must be positive");
  const SpectrumEvaluator ev(analyze(F, F.grid->max_degree()));
  double lhs = 0;
  for (int j = 0; j < m; ++j) {
    const Rotation rz = rotation_about_z(2.0 * M_PI * j / m);
    lhs += ev(rz.apply(z));
  }
  lhs /= m;
  const double rhs = spherical_mean(ev, UnitVector3(0, 0, 1), z.z, m);
  return {lhs, rhs};
}

namespace {

void check_cosine_exponent(double a) {
  if (!(a > 0.0)) throw precondition_error("cosine_transform: exponent must be positive");
  const double r = std::fmod(a, 2.0);
  if (std::abs(r - 1.0) < 1e-9)
    throw precondition_error("cosine_transform: exponent too close to an odd integer");
}

double cosine_multiplier_with_rule(int l, const QuadratureRule& rule) {
  if (l % 2 == 1) return 0.0;
  double s = 0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    s += rule.weights[k] * legendre_p(l, rule.nodes[k]);
  return 4.0 * M_PI * s;
}

}  // namespace

double cosine_multiplier(int l, double a) {
  if (l < 0) throw precondition_error("cosine_multiplier: negative degree");
  check_cosine_exponent(a);
  const QuadratureRule rule = gauss_jacobi01(l / 2 + 8, a - 1.0);
  return cosine_multiplier_with_rule(l, rule);
}

GridFunction cosine_transform(const GridFunction& f, double a) {
  check_cosine_exponent(a);
  const int L = f.grid->max_degree();
  HarmonicSpectrum s = analyze(f, L);
  const QuadratureRule rule = gauss_jacobi01(L / 2 + 8, a - 1.0);
  for (int l = 0; l <= L; ++l) {
    const double lam = cosine_multiplier_with_rule(l, rule);
    for (int m = -l; m <= l; ++m) s.at(l, m) *= lam;
  }
  return synthesize(s, f.grid);
}

double multiplier_measure(std::shared_ptr<const SphereGrid> g, MultiplierKind kind, int l,
                          double a, const TransformOptions& opt) {
  if (l < 0 || l > g->max_degree())
    throw precondition_error("multiplier_measure: degree outside grid range");
  HarmonicSpectrum unit(l);
  unit.at(l, 0) = 1.0;
  const GridFunction y = synthesize(unit, g);
  GridFunction out =
      (kind == MultiplierKind::Funk) ? funk(y, opt).values() : cosine_transform(y, a);
  double num = 0, den = 0;
  for (std::size_t k = 0; k < g->size(); ++k) {
    num += g->weight(k) * out.values[k] * y.values[k];
    den += g->weight(k) * y.values[k] * y.values[k];
  }
  return num / den;
}

}  // namespace funk
