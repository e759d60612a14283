#include "funk/reference.hpp"

#include <cmath>

#include "funk/errors.hpp"

namespace funk::ref {

double eval_ylm(int l, int m, const UnitVector3& p) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw precondition_error("eval_ylm: bad (l, m)");
  const double ct = p.z;
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  double pmm = 1.0 / std::sqrt(2.0);
  for (int k = 1; k <= am; ++k) pmm *= std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * st;
  double val = pmm;
  if (l > am) {
    double p2 = 0.0, p1 = pmm;
    for (int k = am + 1; k <= l; ++k) {
      double cur;
      if (k == am + 1) {
        cur = std::sqrt(2.0 * am + 3.0) * ct * p1;
      } else {
        const double k2 = static_cast<double>(k) * k;
        const double km2 = static_cast<double>(k - 1) * (k - 1);
        const double A = std::sqrt((4.0 * k2 - 1.0) / (k2 - am * am));
        const double B = std::sqrt((km2 - am * am) / (4.0 * km2 - 1.0));
        cur = A * (ct * p1 - B * p2);
      }
      p2 = p1;
      p1 = cur;
    }
    val = p1;
  }
  const double phi = std::atan2(p.y, p.x);
  if (m == 0) return val / std::sqrt(2.0 * M_PI);
  if (m > 0) return val * std::cos(m * phi) / std::sqrt(M_PI);
  return val * std::sin(am * phi) / std::sqrt(M_PI);
}

double eval_point(const HarmonicSpectrum& s, const UnitVector3& p) {
  double total = 0;
  for (int l = 0; l <= s.L; ++l)
    for (int m = -l; m <= l; ++m) total += s.at(l, m) * eval_ylm(l, m, p);
  return total;
}

HarmonicSpectrum analyze(const GridFunction& f, int L) {
  const SphereGrid& g = *f.grid;
  if (L > g.max_degree()) throw precondition_error("ref::analyze: degree beyond grid");
  HarmonicSpectrum out(L);
  for (int l = 0; l <= L; ++l)
    for (int m = -l; m <= l; ++m) {
      double c = 0;
      for (std::size_t k = 0; k < g.size(); ++k)
        c += g.weight(k) * f.values[k] * eval_ylm(l, m, g.node(k));
      out.at(l, m) = c;
    }
  return out;
}

GridFunction synthesize(const HarmonicSpectrum& s, std::shared_ptr<const SphereGrid> g) {
  GridFunction out(std::move(g));
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = eval_point(s, out.grid->node(k));
  return out;
}

std::vector<double> funk_values(const GridFunction& f, int m_circle) {
  const SphereGrid& g = *f.grid;
  const HarmonicSpectrum s = ref::analyze(f, g.max_degree());
  std::vector<double> out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto nodes = great_circle_nodes(GreatCircle(g.node(k)), m_circle);
    double acc = 0;
    for (const auto& n : nodes) acc += n.weight * eval_point(s, n.point);
    out[k] = acc;
  }
  return out;
}

std::vector<double> dual_funk_values(const GridFunction& phi, int m_rho) {
  const SphereGrid& g = *phi.grid;
  const HarmonicSpectrum s = ref::analyze(phi, g.max_degree());
  std::vector<double> out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Rotation r = rotation_taking_north_to(g.node(k));
    const auto u = r.column(0);
    const auto v = r.column(1);
    double acc = 0;
    for (int j = 0; j < m_rho; ++j) {
      const double a = 2.0 * M_PI * j / m_rho;
      const double ca = std::cos(a), sa = std::sin(a);
      UnitVector3 pole;
      pole.x = -(u[0] * ca + v[0] * sa);
      pole.y = -(u[1] * ca + v[1] * sa);
      pole.z = -(u[2] * ca + v[2] * sa);
      acc += eval_point(s, pole);
    }
    out[k] = acc / m_rho;
  }
  return out;
}

}  // namespace funk::ref
