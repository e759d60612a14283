#pragma once

// Convex bodies given by support functions, their widths and shadow-boundary
// circumferences, and the constant-width <-> constant-circumference
// equivalence check.

#include <array>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "funk/harmonics.hpp"
#include "funk/sphere.hpp"

namespace funk {

// A smooth origin-symmetric-or-not convex body known through its support
// function H.  Construct through the make_* factories, which validate
// positivity of H and a sampled convexity certificate (sections satisfy
// h + h'' > 0).
class SupportBody {
public:
  double support(const UnitVector3& omega) const;  // H(omega)

  enum class Kind { Ball, Ellipsoid, Harmonic };
  Kind kind() const { return kind_; }
  double radius() const { return p_[0]; }                       // Ball
  std::array<double, 3> semi_axes() const { return {p_[0], p_[1], p_[2]}; }  // Ellipsoid
  const HarmonicSpectrum& spectrum() const { return spectrum_; }  // Harmonic

private:
  friend SupportBody make_ball(double R);
  friend SupportBody make_ellipsoid(double a, double b, double c);
  friend SupportBody make_harmonic_body(const HarmonicSpectrum& H);
  SupportBody() = default;

  Kind kind_ = Kind::Ball;
  std::array<double, 3> p_{1, 1, 1};
  HarmonicSpectrum spectrum_;
  std::optional<SpectrumEvaluator> eval_;
};

SupportBody make_ball(double R);
SupportBody make_ellipsoid(double a, double b, double c);
SupportBody make_harmonic_body(const HarmonicSpectrum& H);

// Width in direction omega: H(omega) + H(-omega).
double width(const SupportBody& body, const UnitVector3& omega);

// Circumference of the shadow boundary seen along omega, computed as half
// the great-circle integral of the width over the equator perpendicular to
// omega.
double circumference_funk(const SupportBody& body, const UnitVector3& omega, int m = 256);

// The same quantity from the planar support parametrization of the section:
// integral of h + h'' over the section angle (h'' spectral).  Throws
// precondition_error if the sampled section violates h + h'' > 0.
double circumference_direct(const SupportBody& body, const UnitVector3& omega, int m = 256);

// Point of the shadow-boundary envelope at section angle phi, in the section
// plane's own coordinates.
std::array<double, 2> shadow_boundary(const SupportBody& body, const UnitVector3& omega,
                                      double phi, int m = 256);

// Curvature of the planar section-support curve at angle phi: 1 / (h + h'').
double shadow_curvature(const SupportBody& body, const UnitVector3& omega, double phi,
                        int m = 256);

struct DirectionTable {
  std::vector<UnitVector3> directions;
  std::vector<double> width;
  std::vector<double> circumference;
};

struct MinkowskiReport {
  DirectionTable table;
  double width_mean = 0, width_spread = 0;          // spread = max - min
  double circumference_mean = 0, circumference_spread = 0;
  bool constant_width = false;
  bool constant_circumference = false;
  double tolerance = 0;  // relative, applied as spread <= tol * mean
};

// Samples width and circumference over a direction grid with at least
// `min_directions` nodes and decides constancy of each.  The two verdicts
// agreeing is the classical theorem; this function only reports.
MinkowskiReport minkowski_check(const SupportBody& body, int min_directions = 512,
                                double tol = 1e-6, int m = 256);

}  // namespace funk
