#pragma once

#include <functional>
#include <vector>

namespace funk {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1].  Nodes ascending, exactly antisymmetric
// about 0 (built from one half and mirrored).  Exact for polynomials of
// degree <= 2n-1.
QuadratureRule gauss_legendre(int n);

// Gauss-Jacobi rule for  integral_0^1 t^gamma g(t) dt,  gamma > -1,
// computed from the Jacobi matrix of the (shifted) weight (Golub-Welsch).
// Exact for polynomials g of degree <= 2n-1.
QuadratureRule gauss_jacobi01(int n, double gamma);

// Legendre polynomial P_l(x), three-term recurrence.
double legendre_p(int l, double x);

// P_l(0) via the recurrence P_l(0) = -P_{l-2}(0) * (l-1)/l; zero for odd l.
double legendre_p_zero(int l);

}  // namespace funk
