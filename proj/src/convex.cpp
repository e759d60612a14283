#include "funk/convex.hpp"

#include <cmath>
#include <sstream>

#include "funk/errors.hpp"

namespace funk {

namespace {

// Planar support function of the shadow boundary seen along omega:
// h(phi) = H(u cos phi + v sin phi) with {u, v} an orthonormal frame of the
// plane omega-perp.  Sampled at m equispaced angles; derivatives through the
// interpolating trigonometric polynomial (m even).
class Section {
public:
  Section(const SupportBody& body, const UnitVector3& omega, int m) : m_(m) {
    if (m < 8 || m % 2 != 0)
      throw precondition_error("section: angle count must be even and >= 8");
    const Rotation r = rotation_taking_north_to(omega);
    const auto u = r.column(0);
    const auto v = r.column(1);
    h_.resize(m);
    cos_tab_.resize(m);
    sin_tab_.resize(m);
    for (int j = 0; j < m; ++j) {
      cos_tab_[j] = std::cos(2.0 * M_PI * j / m);
      sin_tab_[j] = std::sin(2.0 * M_PI * j / m);
      UnitVector3 p;
      p.x = u[0] * cos_tab_[j] + v[0] * sin_tab_[j];
      p.y = u[1] * cos_tab_[j] + v[1] * sin_tab_[j];
      p.z = u[2] * cos_tab_[j] + v[2] * sin_tab_[j];
      h_[j] = body.support(p);
    }
    const int half = m / 2;
    ac_.assign(half + 1, 0.0);
    bs_.assign(half + 1, 0.0);
    for (int k = 0; k <= half; ++k) {
      double a = 0, b = 0;
      for (int j = 0; j < m; ++j) {
        const int r_idx = static_cast<int>((static_cast<long long>(k) * j) % m);
        a += h_[j] * cos_tab_[r_idx];
        b += h_[j] * sin_tab_[r_idx];
      }
      ac_[k] = 2.0 * a / m;
      bs_[k] = 2.0 * b / m;
    }
    // second derivative at the samples, through the coefficients
    hpp_.assign(m, 0.0);
    for (int j = 0; j < m; ++j) {
      double s = 0;
      for (int k = 1; k <= half; ++k) {
        const int r_idx = static_cast<int>((static_cast<long long>(k) * j) % m);
        const double scale = (k == half) ? 0.5 : 1.0;
        s -= scale * k * k * (ac_[k] * cos_tab_[r_idx] + bs_[k] * sin_tab_[r_idx]);
      }
      hpp_[j] = s;
    }
  }

  int size() const { return m_; }
  double sample(int j) const { return h_[j]; }
  double sample_pp(int j) const { return hpp_[j]; }
  double angle(int j) const { return 2.0 * M_PI * j / m_; }

  double min_h() const {
    double s = h_[0];
    for (double v : h_) s = std::min(s, v);
    return s;
  }
  double min_h_plus_hpp() const {
    double s = h_[0] + hpp_[0];
    for (int j = 1; j < m_; ++j) s = std::min(s, h_[j] + hpp_[j]);
    return s;
  }

  // trig-series evaluation at arbitrary angle; d = 0, 1, 2 derivatives
  double eval(double phi, int d) const {
    const int half = m_ / 2;
    double total = (d == 0) ? 0.5 * ac_[0] : 0.0;
    double ck = std::cos(phi), sk = std::sin(phi);
    const double c1 = ck, s1 = sk;
    for (int k = 1; k <= half; ++k) {
      const double scale = (k == half) ? 0.5 : 1.0;
      double term;
      if (d == 0)
        term = ac_[k] * ck + bs_[k] * sk;
      else if (d == 1)
        term = static_cast<double>(k) * (-ac_[k] * sk + bs_[k] * ck);
      else
        term = -static_cast<double>(k) * k * (ac_[k] * ck + bs_[k] * sk);
      total += scale * term;
      const double cn = ck * c1 - sk * s1;
      sk = sk * c1 + ck * s1;
      ck = cn;
    }
    return total;
  }

private:
  int m_;
  std::vector<double> h_, hpp_;
  std::vector<double> ac_, bs_;
  std::vector<double> cos_tab_, sin_tab_;
};

void require_convex_section(const Section& s, const UnitVector3& omega, const char* who) {
  const double worst = s.min_h_plus_hpp();
  if (!(worst > 0.0)) {
    std::ostringstream msg;
    msg << who << ": support data is not convex; min(h + h'') = " << worst
        << " on the section with normal (" << omega.x << ", " << omega.y << ", " << omega.z
        << ")";
    throw precondition_error(msg.str());
  }
}

void validate_harmonic_body(const SupportBody& b) {
  // positivity of H over a dense node set
  const SphereGrid pos(16, 32);
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (!(b.support(pos.node(k)) > 0.0))
      throw precondition_error("make_harmonic_body: support function is not positive");
  // sampled convexity certificate: sections across an orientation sweep
  const SphereGrid ori(4, 16);
  for (std::size_t k = 0; k < ori.size(); ++k) {
    const Section s(b, ori.node(k), 256);
    if (!(s.min_h() > 0.0))
      throw precondition_error("make_harmonic_body: support function is not positive");
    require_convex_section(s, ori.node(k), "make_harmonic_body");
  }
}

}  // namespace

double SupportBody::support(const UnitVector3& omega) const {
  switch (kind_) {
    case Kind::Ball:
      return p_[0];
    case Kind::Ellipsoid: {
      const double sx = p_[0] * omega.x, sy = p_[1] * omega.y, sz = p_[2] * omega.z;
      return std::sqrt(sx * sx + sy * sy + sz * sz);
    }
    case Kind::Harmonic:
      return (*eval_)(omega);
  }
  return 0;  // unreachable
}

SupportBody make_ball(double R) {
  if (!(R > 0)) throw precondition_error("make_ball: radius must be positive");
  SupportBody b;
  b.kind_ = SupportBody::Kind::Ball;
  b.p_ = {R, R, R};
  return b;
}

SupportBody make_ellipsoid(double a, double bb, double c) {
  if (!(a > 0 && bb > 0 && c > 0))
    throw precondition_error("make_ellipsoid: semi-axes must be positive");
  SupportBody b;
  b.kind_ = SupportBody::Kind::Ellipsoid;
  b.p_ = {a, bb, c};
  return b;
}

SupportBody make_harmonic_body(const HarmonicSpectrum& H) {
  SupportBody b;
  b.kind_ = SupportBody::Kind::Harmonic;
  b.spectrum_ = H;
  b.eval_.emplace(H);
  validate_harmonic_body(b);
  return b;
}

double width(const SupportBody& body, const UnitVector3& omega) {
  return body.support(omega) + body.support(-omega);
}

double circumference_funk(const SupportBody& body, const UnitVector3& omega, int m) {
  // half the great-circle integral of the width over the directions
  // perpendicular to omega
  const auto nodes = great_circle_nodes(GreatCircle(omega), m);
  double acc = 0;
  for (const auto& n : nodes) acc += n.weight * (body.support(n.point) + body.support(-n.point));
  return 0.5 * acc;
}

double circumference_direct(const SupportBody& body, const UnitVector3& omega, int m) {
  const Section s(body, omega, m);
  require_convex_section(s, omega, "circumference_direct");
  const double w = 2.0 * M_PI / m;
  double full = 0, simplified = 0;
  for (int j = 0; j < m; ++j) {
    full += s.sample(j) + s.sample_pp(j);
    simplified += s.sample(j);
  }
  full *= w;
  simplified *= w;
  // the h'' term integrates to zero over the period; the two forms may only
  // differ by accumulated roundoff
  if (std::abs(full - simplified) > 1e-8 * std::max(1.0, std::abs(full)))
    throw std::logic_error("circumference_direct: periodic term failed to cancel");
  return full;
}

std::array<double, 2> shadow_boundary(const SupportBody& body, const UnitVector3& omega,
                                      double phi, int m) {
  const Section s(body, omega, m);
  const double h = s.eval(phi, 0), hp = s.eval(phi, 1);
  const double c = std::cos(phi), sn = std::sin(phi);
  return {h * c - hp * sn, h * sn + hp * c};
}

double shadow_curvature(const SupportBody& body, const UnitVector3& omega, double phi, int m) {
  const Section s(body, omega, m);
  const double denom = s.eval(phi, 0) + s.eval(phi, 2);
  if (!(denom > 0))
    throw precondition_error("shadow_curvature: h + h'' not positive at the requested angle");
  return 1.0 / denom;
}

MinkowskiReport minkowski_check(const SupportBody& body, int min_directions, double tol,
                                int m) {
  if (min_directions < 2) throw precondition_error("minkowski_check: need >= 2 directions");
  int n_lat = static_cast<int>(std::ceil(std::sqrt(min_directions / 2.0)));
  if (n_lat < 2) n_lat = 2;
  const auto dirs = std::make_shared<const SphereGrid>(n_lat, 2 * n_lat);

  MinkowskiReport rep;
  rep.tolerance = tol;
  const std::size_t n = dirs->size();
  rep.table.directions.resize(n);
  rep.table.width.resize(n);
  rep.table.circumference.resize(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    const UnitVector3 d = dirs->node(k);
    rep.table.directions[k] = d;
    rep.table.width[k] = width(body, d);
    rep.table.circumference[k] = circumference_funk(body, d, m);
  }

  auto stats = [](const std::vector<double>& v, double& mean, double& spread) {
    double lo = v[0], hi = v[0], s = 0;
    for (double x : v) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      s += x;
    }
    mean = s / v.size();
    spread = hi - lo;
  };
  stats(rep.table.width, rep.width_mean, rep.width_spread);
  stats(rep.table.circumference, rep.circumference_mean, rep.circumference_spread);
  rep.constant_width = rep.width_spread <= tol * std::abs(rep.width_mean);
  rep.constant_circumference =
      rep.circumference_spread <= tol * std::abs(rep.circumference_mean);
  return rep;
}

}  // namespace funk
