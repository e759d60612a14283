#pragma once

// Two independent inversions of the great-circle transform, plus the
// verifiable integral identity that links the transform pair to fractional
// integration of the spherical-mean profile.

#include <memory>
#include <vector>

#include "funk/fractional.hpp"
#include "funk/harmonics.hpp"
#include "funk/sphere.hpp"
#include "funk/transforms.hpp"

namespace funk {

struct IdentityOptions {
  int N_t = 512;        // radial grid for the fractional side
  TransformOptions transform;
};

struct IdentityCheck {
  double lhs;  // dual side:       generalized dual of the transform at (x, theta)
  double rhs;  // fractional side: 2*sqrt(pi) * (I^{1/2} f~_x)(cos^2 theta)
};

// Checks the pointwise identity between the generalized dual of M f and the
// half-order fractional integral of the normalized spherical-mean profile
// f~_x(tau) = tau^(-1/2) * (mean of f at distance acos(sqrt(tau)) from x).
// Requires f even and theta in (0, pi/2).
IdentityCheck verify_identity(const GridFunction& f, const UnitVector3& x, double theta,
                              const IdentityOptions& opt = {});

// Amortized version for many (x, theta) pairs: the transform is computed
// once, the radial profile once per point x.
class IdentityVerifier {
public:
  IdentityVerifier(const GridFunction& f, const IdentityOptions& opt = {});

  RadialProfile profile_for(const UnitVector3& x) const;
  double lhs(const UnitVector3& x, double theta) const;
  double rhs(const RadialProfile& profile, double theta) const;
  IdentityCheck check(const UnitVector3& x, double theta) const;

private:
  IdentityOptions opt_;
  SpectrumEvaluator f_ev_;
  CircleFunction transformed_;
};

// The same identity with the dimension kept symbolic: for f == 1 on S^(n-1)
// both sides reduce to the area of S^(n-2); lhs and rhs are evaluated by two
// different closed-form routes (no grid involved).  n real, n > 2.
IdentityCheck verify_identity_symbolic(double n, double theta);

struct HarmonicInversionOptions {
  // Odd content of g is accepted up to max(rel * max|c|, abs * (1 + sup|g|)).
  double odd_rel = 1e-6;
  double odd_abs = 1e-9;
  // Multipliers below guard * 2*pi are zeroed instead of divided by.
  double multiplier_guard = 1e-6;
};

// Spectral inversion: divide even coefficients by the degree multipliers,
// drop odd degrees after checking g has no significant odd content (range
// condition; violated -> precondition_error).  Degrees whose multiplier was
// guarded to zero are appended to *zeroed_degrees when given.
GridFunction invert_harmonic(const CircleFunction& g, int L,
                             const HarmonicInversionOptions& opt = {},
                             std::vector<int>* zeroed_degrees = nullptr);

struct AbelOptions {
  int rho_nodes = 256;    // K-average samples for the dual evaluations
  double delta0 = 1.0 / 16.0;  // coarsest distance from the t = 1 endpoint
  int levels = 4;              // extrapolation levels (delta0 / 2^k)
  double converge_abs = 1e-6;
  double converge_rel = 1e-3;
  HarmonicInversionOptions range;  // odd-content thresholds reused
};

struct AbelReconstructionReport {
  UnitVector3 x;
  std::vector<double> t_nodes;
  std::vector<double> dual_profile;        // h(t): scaled generalized dual of g
  std::vector<double> fractional_profile;  // (D^{1/2} h)(t)
  std::vector<double> deltas;              // actual 1 - t at the extraction nodes
  std::vector<double> raw_values;          // sqrt(t) * fractional_profile there
  std::vector<double> diagonal;            // polynomial extrapolants in delta -> 0
  double recovered = 0.0;
  bool converged = false;
};

// Pointwise inversion through the fractional pipeline: build the dual-side
// profile h(t), differentiate to order 1/2, extrapolate sqrt(t) * f~_x(t) to
// t = 1.  The limit is f(x).  Checks the range condition like
// invert_harmonic.
AbelReconstructionReport invert_abel(const CircleFunction& g, const UnitVector3& x,
                                     int N_t = 512, const AbelOptions& opt = {});

}  // namespace funk
