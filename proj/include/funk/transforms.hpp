#pragma once

// The great-circle (Funk) transform, its dual, the generalized one-parameter
// families, spherical means, and the cosine transform family.
//
// Functions-on-circles are represented by their values at the circle's pole;
// every such function is even, and the even sampling grid keeps the antipodal
// identification exact.

#include <memory>
#include <utility>

#include "funk/harmonics.hpp"
#include "funk/sphere.hpp"

namespace funk {

// Output of the circle transform: an even function on the sphere of poles.
// Carries its spectrum (analyzed at the grid's max degree) and a measured
// odd fraction for precondition checks downstream.
class CircleFunction {
public:
  explicit CircleFunction(GridFunction values);

  const GridFunction& values() const { return values_; }
  const HarmonicSpectrum& spectrum() const { return spectrum_; }
  double odd_fraction() const { return odd_fraction_; }

private:
  GridFunction values_;
  HarmonicSpectrum spectrum_;
  double odd_fraction_;
};

struct TransformOptions {
  int circle_nodes = 256;  // quadrature points per great circle
  int rho_nodes = 256;     // samples of the rotation group K about e_3
};

// (M f)(circle) = integral of f over the circle, arclength measure; total
// mass of the constant 1 is 2*pi.  Evaluated for every grid node as pole.
CircleFunction funk(const GridFunction& f, const TransformOptions& opt = {});

// Dual: average of phi over the circles through x (equivalently over the
// great circle of poles perpendicular to x).  Requires phi even.
GridFunction dual_funk(const CircleFunction& phi, const TransformOptions& opt = {});

// Average of f over the circle { sigma : <sigma, theta_dir> = t }, |t| < 1.
double spherical_mean(const GridFunction& f, const UnitVector3& theta_dir, double t,
                      int m = 256);
double spherical_mean(const SpectrumEvaluator& f, const UnitVector3& theta_dir, double t,
                      int m = 256);

// Generalized transform at inclination theta_ang: average of f over the
// orbit of x_theta = e_1 cos(theta) + e_3 sin(theta) under rotations about
// e_3, carried to the circle xi by rotation_taking_north_to(xi.pole).
// theta_ang = 0 recovers funk up to the 1/(2*pi) normalization.
double generalized_funk(const GridFunction& f, const GreatCircle& xi, double theta_ang,
                        int m = 256);
double generalized_funk(const SpectrumEvaluator& f, const GreatCircle& xi, double theta_ang,
                        int m = 256);

// Generalized dual at inclination theta_ang: average of phi over the poles
// r_x Rz(rho) q_theta, q_theta = (-cos(theta), 0, sin(theta)).  theta_ang = 0
// recovers dual_funk.  Requires phi even (checked via odd_fraction).
double generalized_dual(const CircleFunction& phi, const UnitVector3& x, double theta_ang,
                        int m = 256);
double generalized_dual(const SpectrumEvaluator& phi_ev, double phi_odd_fraction,
                        const UnitVector3& x, double theta_ang, int m = 256);

// Average of F over the orbit { Rz(rho) z } of rotations about e_3.  The
// identity  orbit average = spherical mean of F at the pole with t = z_3
// holds exactly; both sides are returned for checking.
std::pair<double, double> k_average_identity_check(const GridFunction& F,
                                                   const UnitVector3& z, int m = 256);

// Cosine-power transform  (C^a f)(x) = integral_{S^2} |<x,sigma>|^(a-1) f(sigma) dsigma.
// Diagonal on harmonics; implemented spectrally.  a > 0 and a not an odd
// integer (where the multipliers degenerate); a = 2 gives 2*pi on constants.
GridFunction cosine_transform(const GridFunction& f, double a);

// Its eigenvalue on degree l (0 for odd l), via Gauss-Jacobi quadrature of
// 4*pi * integral_0^1 P_l(t) t^(a-1) dt.
double cosine_multiplier(int l, double a);

enum class MultiplierKind { Funk, Cosine };

// Measures the eigenvalue of the chosen operator on degree l empirically:
// applies it to a sampled Y_{l,0} and returns the weighted least-squares
// ratio <out, Y> / <Y, Y> on the grid.
double multiplier_measure(std::shared_ptr<const SphereGrid> g, MultiplierKind kind, int l,
                          double a = 0.0, const TransformOptions& opt = {});

}  // namespace funk
