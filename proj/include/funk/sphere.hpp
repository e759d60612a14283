#pragma once

// Geometry of the unit sphere: points, rotations, great circles, and the
// product quadrature grid the transforms operate on.

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace funk {

struct UnitVector3 {
  double x = 0.0, y = 0.0, z = 1.0;

  UnitVector3() = default;
  // Normalizes; throws precondition_error on a (near-)zero vector.
  UnitVector3(double X, double Y, double Z);

  double dot(const UnitVector3& o) const { return x * o.x + y * o.y + z * o.z; }
  UnitVector3 operator-() const;
  double norm_error() const;  // | |v| - 1 |
};

UnitVector3 cross(const UnitVector3& a, const UnitVector3& b);

// Proper rotation, row-major 3x3.
struct Rotation {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Rotation identity() { return Rotation{}; }
  UnitVector3 apply(const UnitVector3& v) const;
  // Column k of the matrix = image of the k-th basis vector (k = 0,1,2).
  // Unlike apply() this performs no normalization.
  std::array<double, 3> column(int k) const;
  Rotation transposed() const;
  Rotation operator*(const Rotation& o) const;
  double orthogonality_error() const;  // max |R^T R - I| entry
};

// Rotation by angle theta in the span{e_k, e_3} plane (k = 1 or 2), identity
// on the complement.  Maps e_3 to -e_k sin(theta)... see implementation; the
// defining property used everywhere is  g_k(theta) e_3 = e_k cos(theta) + e_3 sin(theta)
// for theta measured from the equator.
Rotation make_rotation_g(int k, double theta);

// Rotation about e_3 by angle a.
Rotation rotation_about_z(double a);

// Minimal geodesic rotation taking the north pole e_3 to target (Rodrigues).
// For target = -e_3 (within tolerance) returns the rotation by pi about e_1.
Rotation rotation_taking_north_to(const UnitVector3& target);

// A great circle, stored as its pole with a fixed orientation convention so
// that equal circles compare equal: pole.z > 0, ties broken by pole.y > 0,
// then pole.x > 0.
struct GreatCircle {
  UnitVector3 pole;

  GreatCircle() = default;
  explicit GreatCircle(const UnitVector3& p);  // canonicalizes
  bool operator==(const GreatCircle& o) const;
};

struct CircleNode {
  UnitVector3 point;
  double weight;
};

// m equispaced nodes on the great circle with the given pole; weights 2*pi/m
// (trapezoidal rule for the arclength integral, exact for trigonometric
// integrands of degree < m).
std::vector<CircleNode> great_circle_nodes(const GreatCircle& c, int m);

// m equispaced nodes on the circle { x : <x, axis> = t }, |t| < 1; weights
// 1/m so the rule computes the *average* over the circle.
std::vector<CircleNode> latitude_circle_nodes(const UnitVector3& axis, double t, int m);

// 2 * Gauss-Chebyshev: approximates  integral_{-1}^{1} F(u) (1-u^2)^{-1/2} du * 2
// which equals the full rotation-invariant reduction of a zonal integrand.
// Exact for polynomial F of degree < 2m... used by tests and the symbolic-n
// scalar path; the angle form is (2*pi/m) sum F(cos s_j) in disguise.
double zonal_reduction(const std::function<double(double)>& F, int m);

// Product grid: n_lat Gauss-Legendre colatitude rows x n_lon uniform
// longitudes.  Node index idx = i * n_lon + j, i = 0 (north) .. n_lat-1.
// Rows are mirror-symmetric, so every node's antipode is a node.
// Weights sum to 4*pi; integrate() is exact for harmonics of degree
// <= n_lat - 1 (and far beyond in the longitude direction).
class SphereGrid {
public:
  SphereGrid(int n_lat, int n_lon);

  int n_lat() const { return n_lat_; }
  int n_lon() const { return n_lon_; }
  std::size_t size() const { return nodes_.size(); }
  // Max harmonic degree the grid resolves exactly.
  int max_degree() const { return n_lat_ - 1; }

  const UnitVector3& node(std::size_t idx) const { return nodes_[idx]; }
  double weight(std::size_t idx) const { return weights_[idx]; }
  std::size_t node_index(int i, int j) const { return static_cast<std::size_t>(i) * n_lon_ + j; }
  std::size_t antipode_index(std::size_t idx) const;

  double cos_colat(int i) const { return cos_colat_[i]; }
  double sin_colat(int i) const { return sin_colat_[i]; }
  double row_weight(int i) const { return row_weight_[i]; }  // GL weight * 2*pi/n_lon
  double cos_lon(int j) const { return cos_lon_[j]; }
  double sin_lon(int j) const { return sin_lon_[j]; }
  double lon(int j) const;

  double integrate(const std::vector<double>& values) const;

private:
  int n_lat_, n_lon_;
  std::vector<double> cos_colat_, sin_colat_, row_weight_;
  std::vector<double> cos_lon_, sin_lon_;
  std::vector<UnitVector3> nodes_;
  std::vector<double> weights_;
};

// Samples of a function at the nodes of a shared grid.
struct GridFunction {
  std::shared_ptr<const SphereGrid> grid;
  std::vector<double> values;

  GridFunction() = default;
  GridFunction(std::shared_ptr<const SphereGrid> g, std::vector<double> v);
  explicit GridFunction(std::shared_ptr<const SphereGrid> g);  // zeros

  double integrate() const { return grid->integrate(values); }
  // sup |f| over nodes
  double sup_abs() const;
  // sup |f(x) - f(-x)| / (2 sup |f|); 0 for the zero function
  double odd_fraction() const;
};

GridFunction sample(std::shared_ptr<const SphereGrid> g,
                    const std::function<double(const UnitVector3&)>& f);

// Even/odd parts (f(x) +- f(-x))/2, computed by the exact antipodal node map.
std::pair<GridFunction, GridFunction> parity_split(const GridFunction& f);

}  // namespace funk
