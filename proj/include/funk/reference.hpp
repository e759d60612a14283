#pragma once

// Plain serial implementations kept for testing the optimized kernels.
// Everything here is written as directly as possible from the defining
// formulas: per-coefficient recurrences, full double loops, no spectrum
// truncation, no OpenMP.  Slow on purpose.

#include "funk/harmonics.hpp"
#include "funk/sphere.hpp"

namespace funk::ref {

// Y_{l,m}(p) for a single (l, m), scalar recurrence each call.
double eval_ylm(int l, int m, const UnitVector3& p);

// Pointwise synthesis: sum of c_{l,m} Y_{l,m}(p) over all coefficients.
double eval_point(const HarmonicSpectrum& s, const UnitVector3& p);

// Quadrature inner products against each basis function separately.
HarmonicSpectrum analyze(const GridFunction& f, int L);

GridFunction synthesize(const HarmonicSpectrum& s, std::shared_ptr<const SphereGrid> g);

// Great-circle transform: for every grid node as pole, the trapezoidal sum
// of the synthesized integrand over m_circle equispaced circle points.
std::vector<double> funk_values(const GridFunction& f, int m_circle);

// Average over the circles through each grid node (orbit of poles).
std::vector<double> dual_funk_values(const GridFunction& phi, int m_rho);

}  // namespace funk::ref
