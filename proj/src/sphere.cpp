#include "funk/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "funk/errors.hpp"
#include "funk/quadrature.hpp"

namespace funk {

UnitVector3::UnitVector3(double X, double Y, double Z) {
  double n = std::sqrt(X * X + Y * Y + Z * Z);
  if (n < 1e-14) throw precondition_error("UnitVector3: zero vector");
  x = X / n;
  y = Y / n;
  z = Z / n;
}

UnitVector3 UnitVector3::operator-() const {
  UnitVector3 v;
  v.x = -x;
  v.y = -y;
  v.z = -z;
  return v;
}

double UnitVector3::norm_error() const {
  return std::abs(std::sqrt(x * x + y * y + z * z) - 1.0);
}

UnitVector3 cross(const UnitVector3& a, const UnitVector3& b) {
  return UnitVector3(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x);
}

UnitVector3 Rotation::apply(const UnitVector3& v) const {
  UnitVector3 r;
  r.x = m[0] * v.x + m[1] * v.y + m[2] * v.z;
  r.y = m[3] * v.x + m[4] * v.y + m[5] * v.z;
  r.z = m[6] * v.x + m[7] * v.y + m[8] * v.z;
  return r;  // rotations preserve norm; skip renormalization
}

std::array<double, 3> Rotation::column(int k) const {
  return {m[k], m[3 + k], m[6 + k]};
}

Rotation Rotation::transposed() const {
  Rotation r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i * 3 + j] = m[j * 3 + i];
  return r;
}

Rotation Rotation::operator*(const Rotation& o) const {
  Rotation r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m[i * 3 + k] * o.m[k * 3 + j];
      r.m[i * 3 + j] = s;
    }
  return r;
}

double Rotation::orthogonality_error() const {
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m[k * 3 + i] * m[k * 3 + j];
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

Rotation make_rotation_g(int k, double theta) {
  if (k != 1 && k != 2) throw precondition_error("make_rotation_g: k must be 1 or 2");
  // In the (e_k, e_3) plane:  e_k -> sin(th) e_k - cos(th) e_3,
  //                           e_3 -> cos(th) e_k + sin(th) e_3.
  Rotation r;
  const int a = k - 1;
  const double s = std::sin(theta), c = std::cos(theta);
  r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  r.m[a * 3 + a] = s;
  r.m[a * 3 + 2] = c;
  r.m[2 * 3 + a] = -c;
  r.m[2 * 3 + 2] = s;
  return r;
}

Rotation rotation_about_z(double a) {
  Rotation r;
  const double c = std::cos(a), s = std::sin(a);
  r.m = {c, -s, 0, s, c, 0, 0, 0, 1};
  return r;
}

Rotation rotation_taking_north_to(const UnitVector3& target) {
  const double x = target.x, y = target.y, z = target.z;
  const double s = std::sqrt(x * x + y * y);
  Rotation r;
  if (s < 1e-14) {
    if (z > 0) return Rotation::identity();
    // south pole: rotation by pi about e_1
    r.m = {1, 0, 0, 0, -1, 0, 0, 0, -1};
    return r;
  }
  // Rodrigues about the axis u = (e_3 x target)/|..| = (-y, x, 0)/s, by the
  // geodesic angle (cos = z, sin = s).
  const double u1 = -y / s, u2 = x / s;
  const double c = z, omc = 1.0 - z;
  r.m = {c + omc * u1 * u1, omc * u1 * u2,     s * u2,
         omc * u1 * u2,     c + omc * u2 * u2, -s * u1,
         -s * u2,           s * u1,            c};
  return r;
}

GreatCircle::GreatCircle(const UnitVector3& p) : pole(p) {
  bool flip = false;
  if (pole.z < 0)
    flip = true;
  else if (pole.z == 0) {
    if (pole.y < 0)
      flip = true;
    else if (pole.y == 0 && pole.x < 0)
      flip = true;
  }
  if (flip) pole = -pole;
}

bool GreatCircle::operator==(const GreatCircle& o) const {
  return pole.x == o.pole.x && pole.y == o.pole.y && pole.z == o.pole.z;
}

std::vector<CircleNode> great_circle_nodes(const GreatCircle& c, int m) {
  if (m < 1) throw precondition_error("great_circle_nodes: m must be positive");
  const Rotation r = rotation_taking_north_to(c.pole);
  const auto u = r.column(0);
  const auto v = r.column(1);
  std::vector<CircleNode> out(m);
  const double w = 2.0 * M_PI / m;
  for (int j = 0; j < m; ++j) {
    const double a = w * j;
    const double ca = std::cos(a), sa = std::sin(a);
    UnitVector3 p;
    p.x = u[0] * ca + v[0] * sa;
    p.y = u[1] * ca + v[1] * sa;
    p.z = u[2] * ca + v[2] * sa;
    out[j] = {p, w};
  }
  return out;
}

std::vector<CircleNode> latitude_circle_nodes(const UnitVector3& axis, double t, int m) {
  if (m < 1) throw precondition_error("latitude_circle_nodes: m must be positive");
  if (!(std::abs(t) < 1.0))
    throw precondition_error("latitude_circle_nodes: need |t| < 1");
  const Rotation r = rotation_taking_north_to(axis);
  const auto u = r.column(0);
  const auto v = r.column(1);
  const double rad = std::sqrt(1.0 - t * t);
  std::vector<CircleNode> out(m);
  const double step = 2.0 * M_PI / m;
  for (int j = 0; j < m; ++j) {
    const double a = step * j;
    const double ca = rad * std::cos(a), sa = rad * std::sin(a);
    UnitVector3 p;
    p.x = t * axis.x + u[0] * ca + v[0] * sa;
    p.y = t * axis.y + u[1] * ca + v[1] * sa;
    p.z = t * axis.z + u[2] * ca + v[2] * sa;
    out[j] = {p, 1.0 / m};
  }
  return out;
}

double zonal_reduction(const std::function<double(double)>& F, int m) {
  if (m < 1) throw precondition_error("zonal_reduction: m must be positive");
  // Chebyshev nodes cos((2j-1) pi / (2m)) carry the circle measure exactly;
  // the factor 2 closes the half-period.
  double s = 0;
  for (int j = 1; j <= m; ++j) s += F(std::cos((2 * j - 1) * M_PI / (2 * m)));
  return 2.0 * M_PI / m * s;
}

SphereGrid::SphereGrid(int n_lat, int n_lon) : n_lat_(n_lat), n_lon_(n_lon) {
  if (n_lat < 1) throw precondition_error("SphereGrid: n_lat must be positive");
  if (n_lon < 2 || n_lon % 2 != 0)
    throw precondition_error("SphereGrid: n_lon must be even and >= 2 (antipodal closure)");
  QuadratureRule gl = gauss_legendre(n_lat);
  cos_colat_.resize(n_lat);
  sin_colat_.resize(n_lat);
  row_weight_.resize(n_lat);
  for (int i = 0; i < n_lat; ++i) {
    // row 0 at the north pole side: descending cos(colatitude)
    double x = gl.nodes[n_lat - 1 - i];
    cos_colat_[i] = x;
    sin_colat_[i] = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
    row_weight_[i] = gl.weights[n_lat - 1 - i] * (2.0 * M_PI / n_lon);
  }
  // second half of the longitude tables by exact negation so antipodal
  // node coordinates mirror bitwise
  cos_lon_.resize(n_lon);
  sin_lon_.resize(n_lon);
  const int half = n_lon / 2;
  for (int j = 0; j < half; ++j) {
    cos_lon_[j] = std::cos(2.0 * M_PI * j / n_lon);
    sin_lon_[j] = std::sin(2.0 * M_PI * j / n_lon);
    cos_lon_[j + half] = -cos_lon_[j];
    sin_lon_[j + half] = -sin_lon_[j];
  }
  nodes_.resize(static_cast<std::size_t>(n_lat) * n_lon);
  weights_.resize(nodes_.size());
  for (int i = 0; i < n_lat; ++i)
    for (int j = 0; j < n_lon; ++j) {
      UnitVector3 p;
      p.x = sin_colat_[i] * cos_lon_[j];
      p.y = sin_colat_[i] * sin_lon_[j];
      p.z = cos_colat_[i];
      nodes_[node_index(i, j)] = p;
      weights_[node_index(i, j)] = row_weight_[i];
    }
}

std::size_t SphereGrid::antipode_index(std::size_t idx) const {
  const int i = static_cast<int>(idx) / n_lon_;
  const int j = static_cast<int>(idx) % n_lon_;
  return node_index(n_lat_ - 1 - i, (j + n_lon_ / 2) % n_lon_);
}

double SphereGrid::lon(int j) const { return 2.0 * M_PI * j / n_lon_; }

double SphereGrid::integrate(const std::vector<double>& values) const {
  if (values.size() != nodes_.size())
    throw precondition_error("SphereGrid::integrate: value count does not match grid");
  double s = 0;
  for (std::size_t k = 0; k < values.size(); ++k) s += weights_[k] * values[k];
  return s;
}

GridFunction::GridFunction(std::shared_ptr<const SphereGrid> g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
  if (!grid) throw precondition_error("GridFunction: null grid");
  if (values.size() != grid->size())
    throw precondition_error("GridFunction: value count does not match grid");
}

GridFunction::GridFunction(std::shared_ptr<const SphereGrid> g) : grid(std::move(g)) {
  if (!grid) throw precondition_error("GridFunction: null grid");
  values.assign(grid->size(), 0.0);
}

double GridFunction::sup_abs() const {
  double s = 0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

double GridFunction::odd_fraction() const {
  const double sup = sup_abs();
  if (sup == 0) return 0;
  double worst = 0;
  for (std::size_t k = 0; k < values.size(); ++k)
    worst = std::max(worst, std::abs(values[k] - values[grid->antipode_index(k)]));
  return worst / (2.0 * sup);
}

GridFunction sample(std::shared_ptr<const SphereGrid> g,
                    const std::function<double(const UnitVector3&)>& f) {
  GridFunction out(std::move(g));
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = f(out.grid->node(k));
  return out;
}

std::pair<GridFunction, GridFunction> parity_split(const GridFunction& f) {
  GridFunction even(f.grid), odd(f.grid);
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    const double a = f.values[k];
    const double b = f.values[f.grid->antipode_index(k)];
    even.values[k] = 0.5 * (a + b);
    odd.values[k] = 0.5 * (a - b);
  }
  return {std::move(even), std::move(odd)};
}

}  // namespace funk
