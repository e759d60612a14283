#include "funk/fractional.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "funk/errors.hpp"

namespace funk {

namespace {

void validate_profile(const RadialProfile& p, const char* who) {
  if (p.N < 1 || p.values.size() != static_cast<std::size_t>(p.N))
    throw precondition_error(std::string(who) + ": profile size mismatch");
  if (!(p.left_endpoint_exponent > -1.0))
    throw precondition_error(std::string(who) + ": endpoint exponent must be > -1");
}

// Incomplete beta integral  B(z; p, q) = integral_0^z u^(p-1) (1-u)^(q-1) du
// (non-regularized).
inline double inc_beta(double p, double q, double z) {
  if (z <= 0.0) return 0.0;
  if (z >= 1.0) return boost::math::beta(p, q);
  return boost::math::beta(p, q, z);
}

// One evaluation of Gamma(a) * (I^a psi)(t) by the product-trapezoidal rule.
// q = psi * tau^(-gamma) is interpolated linearly on every cell; on [0, t_1]
// the line through (t_1, q_1), (t_2, q_2) is extended down to tau = 0, so the
// rule is exact whenever q is linear.  The kernel moments carrying tau^gamma
// are computed exactly.  K = number of complete cells below t; t may sit
// inside cell K+1.
double weighted_sum(const RadialProfile& psi, double a, double t, int K) {
  const double h = psi.step();
  const double gamma = psi.left_endpoint_exponent;
  const int N = psi.N;

  auto tau = [&](int i) { return static_cast<double>(i) / N; };  // 1-based node
  auto q = [&](int i) {
    return (gamma == 0.0) ? psi.values[i - 1] : psi.values[i - 1] * std::pow(tau(i), -gamma);
  };

  const double s0 = std::pow(t, gamma + a);
  const double s1 = std::pow(t, gamma + 1.0 + a);
  const double q1 = q(1);
  const double q2 = (N >= 2) ? q(2) : q1;  // one-node profile: constant

  if (K == 0) {
    // t inside the first cell
    const double mu0 = s0 * boost::math::beta(gamma + 1.0, a);
    const double mu1 = s1 * boost::math::beta(gamma + 2.0, a);
    return q1 * (tau(2) * mu0 - mu1) / h + q2 * (mu1 - tau(1) * mu0) / h;
  }

  double b0_lo = inc_beta(gamma + 1.0, a, tau(1) / t);
  double b1_lo = inc_beta(gamma + 2.0, a, tau(1) / t);
  double acc = q1 * (tau(2) * s0 * b0_lo - s1 * b1_lo) / h +
               q2 * (s1 * b1_lo - tau(1) * s0 * b0_lo) / h;

  if (gamma == 0.0) {
    // elementary moments, psi interpolated directly
    for (int k = 2; k <= K; ++k) {
      const double d = t - tau(k - 1);
      const double e = t - tau(k);
      const double da = std::pow(d, a), ea = std::pow(e, a);
      const double m0 = (da - ea) / a;
      const double m1 = d * m0 - (da * d - ea * e) / (a + 1.0);
      acc += psi.values[k - 2] * (m0 - m1 / h) + psi.values[k - 1] * (m1 / h);
    }
    if (t > tau(K)) {
      const double d = t - tau(K);
      const double m0 = std::pow(d, a) / a;
      const double m1 = std::pow(d, a + 1.0) / (a * (a + 1.0));
      acc += psi.values[K - 1] * m0 + (psi.values[K] - psi.values[K - 1]) * (m1 / h);
    }
    return acc;
  }

  // weighted moments over [lo, hi]:
  //   mu_j = integral tau^(gamma+j) (t-tau)^(a-1) dtau
  //        = t^(gamma+j+a) * (B(hi/t; gamma+j+1, a) - B(lo/t; gamma+j+1, a))
  for (int k = 2; k <= K; ++k) {
    const double zb = tau(k) / t;
    const double b0_hi = inc_beta(gamma + 1.0, a, zb);
    const double b1_hi = inc_beta(gamma + 2.0, a, zb);
    const double mu0 = s0 * (b0_hi - b0_lo);
    const double mu1 = s1 * (b1_hi - b1_lo);
    acc += q(k - 1) * (tau(k) * mu0 - mu1) / h + q(k) * (mu1 - tau(k - 1) * mu0) / h;
    b0_lo = b0_hi;
    b1_lo = b1_hi;
  }
  if (t > tau(K)) {
    if (K + 1 > N) throw precondition_error("rl_integral: evaluation point beyond the grid");
    const double mu0 = s0 * (inc_beta(gamma + 1.0, a, 1.0) - b0_lo);
    const double mu1 = s1 * (inc_beta(gamma + 2.0, a, 1.0) - b1_lo);
    acc += q(K) * (tau(K + 1) * mu0 - mu1) / h + q(K + 1) * (mu1 - tau(K) * mu0) / h;
  }
  return acc;
}

void validate_integral_order(double a) {
  if (!(a > 0.0 && a <= 2.0))
    throw precondition_error("rl_integral: order must lie in (0, 2]");
}

}  // namespace

RadialProfile sample_profile(int N, double gamma, const std::function<double(double)>& psi) {
  if (N < 1) throw precondition_error("sample_profile: N must be positive");
  RadialProfile p;
  p.N = N;
  p.left_endpoint_exponent = gamma;
  p.values.resize(N);
  for (int i = 1; i <= N; ++i) p.values[i - 1] = psi(static_cast<double>(i) / N);
  return p;
}

RadialProfile rl_integral(const RadialProfile& psi, double a) {
  validate_profile(psi, "rl_integral");
  validate_integral_order(a);
  RadialProfile out;
  out.N = psi.N;
  out.left_endpoint_exponent = psi.left_endpoint_exponent + a;
  out.values.resize(psi.N);
  const double inv_gamma_a = 1.0 / std::tgamma(a);
#pragma omp parallel for schedule(dynamic)
  for (int i = 1; i <= psi.N; ++i)
    out.values[i - 1] = inv_gamma_a * weighted_sum(psi, a, static_cast<double>(i) / psi.N, i);
  return out;
}

double rl_integral_at(const RadialProfile& psi, double a, double t) {
  validate_profile(psi, "rl_integral_at");
  validate_integral_order(a);
  if (!(t > 0.0 && t <= 1.0))
    throw precondition_error("rl_integral_at: t must lie in (0, 1]");
  int K = static_cast<int>(std::floor(t * psi.N + 1e-12));
  if (K > psi.N) K = psi.N;
  // t indistinguishable from node K: treat as the node to avoid a zero-width cell
  if (std::abs(t - static_cast<double>(K) / psi.N) < 1e-15) t = static_cast<double>(K) / psi.N;
  return weighted_sum(psi, a, t, K) / std::tgamma(a);
}

RadialProfile rl_derivative(const RadialProfile& g, double a) {
  validate_profile(g, "rl_derivative");
  if (!(a > 0.0 && a < 1.0))
    throw precondition_error("rl_derivative: order must lie in (0, 1)");
  if (g.N < 5) throw precondition_error("rl_derivative: need at least 5 nodes");
  const RadialProfile G = rl_integral(g, 1.0 - a);
  const int N = g.N;
  const double ih = 1.0 / (12.0 * G.step());
  RadialProfile out;
  out.N = N;
  out.left_endpoint_exponent = G.left_endpoint_exponent - 1.0;
  out.values.resize(N);
  const auto& V = G.values;
  out.values[0] = (-25 * V[0] + 48 * V[1] - 36 * V[2] + 16 * V[3] - 3 * V[4]) * ih;
  out.values[1] = (-3 * V[0] - 10 * V[1] + 18 * V[2] - 6 * V[3] + V[4]) * ih;
  for (int j = 2; j < N - 2; ++j)
    out.values[j] = (-V[j + 2] + 8 * V[j + 1] - 8 * V[j - 1] + V[j - 2]) * ih;
  out.values[N - 2] =
      (3 * V[N - 1] + 10 * V[N - 2] - 18 * V[N - 3] + 6 * V[N - 4] - V[N - 5]) * ih;
  out.values[N - 1] =
      (25 * V[N - 1] - 48 * V[N - 2] + 36 * V[N - 3] - 16 * V[N - 4] + 3 * V[N - 5]) * ih;
  return out;
}

}  // namespace funk
