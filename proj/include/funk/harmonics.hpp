#pragma once

// Real orthonormal spherical harmonics on S^2.
//
// Basis convention: Y_{l,0} = N_{l,0} P_l(cos th),
//   Y_{l,m}  = N_{l,m} P_l^m(cos th) cos(m ph)   (m > 0)
//   Y_{l,-m} = N_{l,m} P_l^m(cos th) sin(m ph)
// normalized so that integral_{S^2} Y^2 = 1, with no Condon-Shortley phase.
// Coefficients are stored flat at index l*(l+1) + m.

#include <cstdint>
#include <memory>
#include <vector>

#include "funk/sphere.hpp"

namespace funk {

struct HarmonicSpectrum {
  int L = 0;                 // max degree
  std::vector<double> c;     // (L+1)^2 coefficients

  HarmonicSpectrum() = default;
  explicit HarmonicSpectrum(int maxl) : L(maxl), c((maxl + 1) * (maxl + 1), 0.0) {}

  static std::size_t index(int l, int m) { return static_cast<std::size_t>(l) * (l + 1) + m; }
  double& at(int l, int m) { return c[index(l, m)]; }
  double at(int l, int m) const { return c[index(l, m)]; }

  double max_abs() const;
  // Largest |c_{l,m}| over odd degrees l <= L.
  double max_abs_odd() const;
};

// Forward analysis: spectral coefficients of f up to degree L by grid
// quadrature.  Exact (to roundoff) when f is band-limited to the grid's
// max_degree() and L <= max_degree().  Throws precondition_error if the grid
// cannot resolve degree L.
HarmonicSpectrum analyze(const GridFunction& f, int L);

// Synthesis onto grid nodes.
GridFunction synthesize(const HarmonicSpectrum& s, std::shared_ptr<const SphereGrid> g);

// Pointwise synthesis anywhere on the sphere.  Built once per spectrum; the
// call operator is re-entrant, so one evaluator can serve all OpenMP threads.
//
// Construction scans for negligible coefficients (relative threshold 1e-14)
// and records the effective degree and the set of active orders m; inactive
// orders cost ~3 flops each during evaluation.  Dropping a coefficient of
// relative size eps changes the value by at most (L+1)^2 * eps * sup|Y|
// ~ 4e3 * 1e-14 * 3.3, i.e. ~1e-10 * max|c|, well under every tolerance
// this library promises.
class SpectrumEvaluator {
public:
  explicit SpectrumEvaluator(const HarmonicSpectrum& s);

  double operator()(const UnitVector3& p) const;
  int effective_degree() const { return L_; }

private:
  int L_ = -1;  // -1 encodes the zero function
  std::vector<double> c_;
  std::vector<std::uint8_t> m_active_;
  // recurrence coefficient tables, index l*(l+1)/2 + m
  std::vector<double> rec_a_, rec_b_;
  std::vector<double> mm_step_;    // P^m_m ladder factors sqrt((2m+1)/(2m))
  std::vector<double> first_step_; // sqrt(2m+3)
};

// Multiplier of the great-circle transform on degree l: 2*pi*P_l(0).
// Zero for odd l; the l = 2 value is -pi.
double funk_multiplier(int l);

}  // namespace funk
