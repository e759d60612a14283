#include "funk/harmonics.hpp"

#include <cmath>
#include <cstring>

#include "funk/errors.hpp"
#include "funk/quadrature.hpp"

namespace funk {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrtPi = 1.0 / std::sqrt(M_PI);
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * M_PI);

inline std::size_t tri(int l, int m) { return static_cast<std::size_t>(l) * (l + 1) / 2 + m; }

// Coefficients for the recurrences of the [-1,1]-orthonormal associated
// Legendre functions (no Condon-Shortley):
//   seed ladder   P^m_m = sqrt((2m+1)/(2m)) * sin(th) * P^{m-1}_{m-1},  P^0_0 = 1/sqrt(2)
//   first step    P^m_{m+1} = sqrt(2m+3) * cos(th) * P^m_m
//   three-term    P^m_l = A_{l,m} * (cos(th) * P^m_{l-1} - B_{l,m} * P^m_{l-2})
struct LegendreTables {
  int L;
  std::vector<double> A, B;        // index tri(l, m), defined for l >= m+2
  std::vector<double> mm_step;     // index m, defined for m >= 1
  std::vector<double> first_step;  // index m

  explicit LegendreTables(int maxl) : L(maxl) {
    A.assign(tri(L, L) + 1, 0.0);
    B.assign(tri(L, L) + 1, 0.0);
    mm_step.assign(L + 1, 0.0);
    first_step.assign(L + 1, 0.0);
    for (int m = 1; m <= L; ++m) mm_step[m] = std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    for (int m = 0; m <= L; ++m) first_step[m] = std::sqrt(2.0 * m + 3.0);
    for (int m = 0; m <= L; ++m)
      for (int l = m + 2; l <= L; ++l) {
        const double l2 = static_cast<double>(l) * l;
        const double lm2 = static_cast<double>(l - 1) * (l - 1);
        A[tri(l, m)] = std::sqrt((4.0 * l2 - 1.0) / (l2 - m * m));
        B[tri(l, m)] = std::sqrt((lm2 - m * m) / (4.0 * lm2 - 1.0));
      }
  }
};

// P^m_l(x) for fixed m and l = m..L, written to out[l - m].
// seed = P^m_m(x) must be supplied (the st^m ladder is the caller's loop).
void legendre_chain(const LegendreTables& T, int m, double ct, double seed, double* out) {
  out[0] = seed;
  if (T.L == m) return;
  out[1] = T.first_step[m] * ct * seed;
  for (int l = m + 2; l <= T.L; ++l)
    out[l - m] = T.A[tri(l, m)] * (ct * out[l - m - 1] - T.B[tri(l, m)] * out[l - m - 2]);
}

// cos(m ph_j), sin(m ph_j) tables for m = 0..L over the grid longitudes,
// by the angle-addition recurrence from the grid's exact base tables.
void longitude_tables(const SphereGrid& g, int L, std::vector<double>& cmj,
                      std::vector<double>& smj) {
  const int n_lon = g.n_lon();
  cmj.assign(static_cast<std::size_t>(L + 1) * n_lon, 0.0);
  smj.assign(static_cast<std::size_t>(L + 1) * n_lon, 0.0);
  for (int j = 0; j < n_lon; ++j) {
    const double c1 = g.cos_lon(j), s1 = g.sin_lon(j);
    double c = 1.0, s = 0.0;
    for (int m = 0; m <= L; ++m) {
      cmj[static_cast<std::size_t>(m) * n_lon + j] = c;
      smj[static_cast<std::size_t>(m) * n_lon + j] = s;
      const double cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
    }
  }
}

}  // namespace

double HarmonicSpectrum::max_abs() const {
  double s = 0;
  for (double v : c) s = std::max(s, std::abs(v));
  return s;
}

double HarmonicSpectrum::max_abs_odd() const {
  double s = 0;
  for (int l = 1; l <= L; l += 2)
    for (int m = -l; m <= l; ++m) s = std::max(s, std::abs(at(l, m)));
  return s;
}

HarmonicSpectrum analyze(const GridFunction& f, int L) {
  const SphereGrid& g = *f.grid;
  if (L < 0) throw precondition_error("analyze: negative degree");
  if (L > g.max_degree())
    throw precondition_error("analyze: grid resolves degree " + std::to_string(g.max_degree()) +
                             ", requested " + std::to_string(L));
  const int n_lat = g.n_lat(), n_lon = g.n_lon();

  std::vector<double> cmj, smj;
  longitude_tables(g, L, cmj, smj);

  // longitude sums per row and order
  std::vector<double> Ac(static_cast<std::size_t>(n_lat) * (L + 1), 0.0);
  std::vector<double> As(static_cast<std::size_t>(n_lat) * (L + 1), 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_lat; ++i) {
    const double* row = f.values.data() + static_cast<std::size_t>(i) * n_lon;
    for (int m = 0; m <= L; ++m) {
      const double* cm = cmj.data() + static_cast<std::size_t>(m) * n_lon;
      const double* sm = smj.data() + static_cast<std::size_t>(m) * n_lon;
      double ac = 0, as = 0;
      for (int j = 0; j < n_lon; ++j) {
        ac += row[j] * cm[j];
        as += row[j] * sm[j];
      }
      Ac[static_cast<std::size_t>(i) * (L + 1) + m] = ac;
      As[static_cast<std::size_t>(i) * (L + 1) + m] = as;
    }
  }

  const LegendreTables T(L);
  // seeds P^m_m at every row, built by the st ladder
  std::vector<double> seed(static_cast<std::size_t>(n_lat) * (L + 1));
  for (int i = 0; i < n_lat; ++i) {
    double v = kInvSqrt2;
    seed[static_cast<std::size_t>(i) * (L + 1)] = v;
    for (int m = 1; m <= L; ++m) {
      v *= T.mm_step[m] * g.sin_colat(i);
      seed[static_cast<std::size_t>(i) * (L + 1) + m] = v;
    }
  }

  HarmonicSpectrum out(L);
#pragma omp parallel
  {
    std::vector<double> chain(L + 1);
#pragma omp for schedule(dynamic)
    for (int m = 0; m <= L; ++m) {
      const double km = (m == 0) ? kInvSqrt2Pi : kInvSqrtPi;
      for (int i = 0; i < n_lat; ++i) {
        legendre_chain(T, m, g.cos_colat(i), seed[static_cast<std::size_t>(i) * (L + 1) + m],
                       chain.data());
        const double wc = g.row_weight(i) * km * Ac[static_cast<std::size_t>(i) * (L + 1) + m];
        const double ws = g.row_weight(i) * km * As[static_cast<std::size_t>(i) * (L + 1) + m];
        for (int l = m; l <= L; ++l) {
          out.at(l, m) += wc * chain[l - m];
          if (m > 0) out.at(l, -m) += ws * chain[l - m];
        }
      }
    }
  }
  return out;
}

GridFunction synthesize(const HarmonicSpectrum& s, std::shared_ptr<const SphereGrid> g) {
  const int L = s.L;
  const SphereGrid& grid = *g;
  const int n_lat = grid.n_lat(), n_lon = grid.n_lon();

  std::vector<double> cmj, smj;
  longitude_tables(grid, L, cmj, smj);

  const LegendreTables T(L);
  std::vector<double> seed(static_cast<std::size_t>(n_lat) * (L + 1));
  for (int i = 0; i < n_lat; ++i) {
    double v = kInvSqrt2;
    seed[static_cast<std::size_t>(i) * (L + 1)] = v;
    for (int m = 1; m <= L; ++m) {
      v *= T.mm_step[m] * grid.sin_colat(i);
      seed[static_cast<std::size_t>(i) * (L + 1) + m] = v;
    }
  }

  // latitude sums  Gc[i][m] = sum_l c_{l,m} P^m_l(x_i)  (and sine part)
  std::vector<double> Gc(static_cast<std::size_t>(n_lat) * (L + 1), 0.0);
  std::vector<double> Gs(static_cast<std::size_t>(n_lat) * (L + 1), 0.0);
#pragma omp parallel
  {
    std::vector<double> chain(L + 1);
#pragma omp for schedule(dynamic)
    for (int m = 0; m <= L; ++m) {
      const double km = (m == 0) ? kInvSqrt2Pi : kInvSqrtPi;
      for (int i = 0; i < n_lat; ++i) {
        legendre_chain(T, m, grid.cos_colat(i), seed[static_cast<std::size_t>(i) * (L + 1) + m],
                       chain.data());
        double gc = 0, gs = 0;
        for (int l = m; l <= L; ++l) {
          gc += s.at(l, m) * chain[l - m];
          if (m > 0) gs += s.at(l, -m) * chain[l - m];
        }
        Gc[static_cast<std::size_t>(i) * (L + 1) + m] = km * gc;
        Gs[static_cast<std::size_t>(i) * (L + 1) + m] = km * gs;
      }
    }
  }

  GridFunction out(std::move(g));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_lat; ++i) {
    double* row = out.values.data() + static_cast<std::size_t>(i) * n_lon;
    const double* gc = Gc.data() + static_cast<std::size_t>(i) * (L + 1);
    const double* gs = Gs.data() + static_cast<std::size_t>(i) * (L + 1);
    for (int j = 0; j < n_lon; ++j) {
      double v = 0;
      for (int m = 0; m <= L; ++m)
        v += gc[m] * cmj[static_cast<std::size_t>(m) * n_lon + j] +
             gs[m] * smj[static_cast<std::size_t>(m) * n_lon + j];
      row[j] = v;
    }
  }
  return out;
}

SpectrumEvaluator::SpectrumEvaluator(const HarmonicSpectrum& s) {
  const double cap = s.max_abs();
  if (cap == 0.0) return;  // zero function, L_ stays -1
  const double thresh = 1e-14 * cap;
  int Leff = 0;
  for (int l = 0; l <= s.L; ++l)
    for (int m = -l; m <= l; ++m)
      if (std::abs(s.at(l, m)) > thresh) Leff = std::max(Leff, l);
  L_ = Leff;
  c_.assign((L_ + 1) * static_cast<std::size_t>(L_ + 1), 0.0);
  for (int l = 0; l <= L_; ++l)
    for (int m = -l; m <= l; ++m) c_[HarmonicSpectrum::index(l, m)] = s.at(l, m);
  m_active_.assign(L_ + 1, 0);
  for (int m = 0; m <= L_; ++m)
    for (int l = m; l <= L_; ++l)
      if (std::abs(s.at(l, m)) > thresh || (m > 0 && std::abs(s.at(l, -m)) > thresh)) {
        m_active_[m] = 1;
        break;
      }
  LegendreTables T(L_);
  rec_a_ = std::move(T.A);
  rec_b_ = std::move(T.B);
  mm_step_ = std::move(T.mm_step);
  first_step_ = std::move(T.first_step);
}

double SpectrumEvaluator::operator()(const UnitVector3& p) const {
  if (L_ < 0) return 0.0;
  const double ct = p.z;
  const double st = std::sqrt(std::max(0.0, (1.0 - ct) * (1.0 + ct)));
  double cphi = 1.0, sphi = 0.0;
  if (st > 1e-290) {
    cphi = p.x / st;
    sphi = p.y / st;
  }
  double total = 0.0;
  double pmm = kInvSqrt2;
  double cm = 1.0, sm = 0.0;  // cos(m phi), sin(m phi)
  for (int m = 0; m <= L_; ++m) {
    if (m > 0) {
      pmm *= mm_step_[m] * st;
      const double cn = cm * cphi - sm * sphi;
      sm = sm * cphi + cm * sphi;
      cm = cn;
    }
    if (!m_active_[m]) continue;
    double p2 = 0.0, p1 = pmm;
    double acc_c = c_[HarmonicSpectrum::index(m, m)] * p1;
    double acc_s = (m > 0) ? c_[HarmonicSpectrum::index(m, -m)] * p1 : 0.0;
    for (int l = m + 1; l <= L_; ++l) {
      double pl;
      if (l == m + 1)
        pl = first_step_[m] * ct * p1;
      else
        pl = rec_a_[tri(l, m)] * (ct * p1 - rec_b_[tri(l, m)] * p2);
      p2 = p1;
      p1 = pl;
      acc_c += c_[HarmonicSpectrum::index(l, m)] * pl;
      if (m > 0) acc_s += c_[HarmonicSpectrum::index(l, -m)] * pl;
    }
    total += (m == 0) ? acc_c * kInvSqrt2Pi : (acc_c * cm + acc_s * sm) * kInvSqrtPi;
  }
  return total;
}

double funk_multiplier(int l) { return 2.0 * M_PI * legendre_p_zero(l); }

}  // namespace funk
