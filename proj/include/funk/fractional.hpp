#pragma once

// Riemann-Liouville fractional integral and derivative on (0, 1], for radial
// profiles sampled on the uniform grid t_i = i/N, i = 1..N.
//
// Profiles may carry an algebraic left-endpoint factor: values[] holds
// psi(t_i) where psi(t) = t^gamma q(t) with q continuous at 0.  The
// quadrature works on q with the t^gamma weight absorbed into exact kernel
// moments, so the singular factor never has to be resolved by the mesh.

#include <functional>
#include <vector>

namespace funk {

struct RadialProfile {
  int N = 0;                           // values.size(); t_i = i/N
  std::vector<double> values;          // psi(t_1) .. psi(t_N)
  double left_endpoint_exponent = -0.5;  // gamma in psi ~ t^gamma near 0

  double t(int i) const { return static_cast<double>(i + 1) / N; }  // i = 0-based
  double step() const { return 1.0 / N; }
};

RadialProfile sample_profile(int N, double gamma, const std::function<double(double)>& psi);

// (I^a psi)(t) = (1/Gamma(a)) integral_0^t (t - tau)^(a-1) psi(tau) dtau,
// a in (0, 2], returned at every grid node.  Product-trapezoidal rule:
// q = psi * t^(-gamma) is interpolated linearly on each cell (the first cell
// extends the line through the first two nodes down to 0) against exact
// moments of the kernel times the endpoint weight.  Exact whenever q is
// linear, in particular for psi = c * t^gamma; second order otherwise.
// The result carries exponent gamma + a.
RadialProfile rl_integral(const RadialProfile& psi, double a);

// Same integral evaluated at a single point t in (0, 1].
double rl_integral_at(const RadialProfile& psi, double a, double t);

// (D^a g)(t) = d/dt (I^{1-a} g)(t), a in (0, 1).  The outer derivative is a
// 4th-order finite difference (central inside, one-sided at the two nodes on
// each end).  The result carries exponent gamma + (1-a) - 1.
RadialProfile rl_derivative(const RadialProfile& g, double a);

}  // namespace funk
