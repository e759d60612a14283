#include "funk/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "funk/errors.hpp"

namespace funk {

double legendre_p(int l, double x) {
  if (l < 0) throw precondition_error("legendre_p: negative degree");
  double pm1 = 1.0, p = x;
  if (l == 0) return 1.0;
  for (int k = 2; k <= l; ++k) {
    double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
    pm1 = p;
    p = pk;
  }
  return p;
}

double legendre_p_zero(int l) {
  if (l < 0) throw precondition_error("legendre_p_zero: negative degree");
  if (l % 2 == 1) return 0.0;
  double v = 1.0;  // P_0(0)
  for (int k = 2; k <= l; k += 2) v *= -static_cast<double>(k - 1) / k;
  return v;
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw precondition_error("gauss_legendre: n must be positive");
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    // Newton from the Chebyshev-like initial guess; converges in a handful
    // of steps for all n used here.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double pm1 = 1.0, p = x;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
        pm1 = p;
        p = pk;
      }
      dp = n * (x * p - pm1) / (x * x - 1.0);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // one clean evaluation of P'_n at the converged node
    {
      double pm1 = 1.0, p = x;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
        pm1 = p;
        p = pk;
      }
      dp = n * (x * p - pm1) / (x * x - 1.0);
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // mirror: store ascending
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    double x = 0.0;
    double pm1 = 1.0, p = x;
    for (int k = 2; k <= n; ++k) {
      double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
      pm1 = p;
      p = pk;
    }
    double dp = n * (x * p - pm1) / (x * x - 1.0);
    r.nodes[half] = 0.0;
    r.weights[half] = 2.0 / (dp * dp);
  }
  return r;
}

QuadratureRule gauss_jacobi01(int n, double gamma) {
  if (n < 1) throw precondition_error("gauss_jacobi01: n must be positive");
  if (gamma <= -1.0) throw precondition_error("gauss_jacobi01: weight exponent must be > -1");
  // Jacobi weight (1-u)^a (1+u)^b on [-1,1] with a = 0, b = gamma maps to
  // t^gamma on [0,1] under t = (1+u)/2.  Three-term recurrence coefficients
  // for the monic Jacobi polynomials, then the Golub-Welsch eigenproblem.
  const double a = 0.0, b = gamma;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  auto alpha_k = [&](int k) {
    double num = b * b - a * a;
    double den = (2.0 * k + a + b) * (2.0 * k + a + b + 2.0);
    if (den == 0.0) return 0.0;  // k = 0 with a + b = 0
    return num / den;
  };
  auto beta_k = [&](int k) {
    // off-diagonal^2 for k >= 1
    double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
    double den = (2.0 * k + a + b) * (2.0 * k + a + b) *
                 (2.0 * k + a + b + 1.0) * (2.0 * k + a + b - 1.0);
    return num / den;
  };
  for (int k = 0; k < n; ++k) {
    double al = (k == 0 && a + b == 0.0) ? (b - a) / (a + b + 2.0) : alpha_k(k);
    // k = 0 with a+b = 0 hits 0/0 in the generic formula; the limit is
    // (b-a)/(a+b+2).  With a = 0 this is gamma/(gamma+2).
    J(k, k) = al;
    if (k >= 1) {
      double be = std::sqrt(beta_k(k));
      J(k, k - 1) = be;
      J(k - 1, k) = be;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi01: eigensolver failed");
  // mu0 = integral of the weight over [-1,1]
  const double mu0 = std::pow(2.0, a + b + 1.0) *
                     std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double u = es.eigenvalues()(k);
    double w = mu0 * es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
    r.nodes[k] = 0.5 * (u + 1.0);
    // d t = du/2 and t^gamma = ((1+u)/2)^gamma are already part of the
    // measure; the [0,1] rule only needs the total-mass rescale.
    r.weights[k] = w / std::pow(2.0, gamma + 1.0);
  }
  return r;
}

}  // namespace funk
