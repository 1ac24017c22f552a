#include "gspec/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gspec {

PeriodicJacobi::PeriodicJacobi(std::vector<double> b, std::vector<double> a) {
  if (b.empty() || b.size() != a.size()) throw std::invalid_argument("periodic Jacobi needs N >= 1 entries in both b and a");
  for (double v : a)
    if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("Jacobi off-diagonal entries must be positive");
  for (double v : b)
    if (!std::isfinite(v)) throw std::invalid_argument("Jacobi diagonal entries must be finite");
  b_ = std::move(b);
  a_ = std::move(a);
}

double PeriodicJacobi::b_at(int n) const {
  if (n < 1) throw std::out_of_range("Jacobi index must be >= 1");
  return b_[(n - 1) % period()];
}

double PeriodicJacobi::a_at(int n) const {
  if (n == 0) return 1.0;
  if (n < 0) throw std::out_of_range("Jacobi index must be >= 0");
  return a_[(n - 1) % period()];
}

namespace {

std::vector<RealPolynomial> three_term(const PeriodicJacobi& j, int upto, RealPolynomial y0, RealPolynomial y1) {
  if (upto < 1) throw std::invalid_argument("polynomial count must be >= 1");
  std::vector<RealPolynomial> y{std::move(y0), std::move(y1)};
  for (int n = 1; n < upto; ++n) {
    RealPolynomial next = RealPolynomial{-j.b_at(n), 1.0} * y[n] - y[n - 1] * j.a_at(n - 1);
    y.push_back(next * (1.0 / j.a_at(n)));
  }
  return y;
}

Eigen::MatrixXd floquet_matrix(const PeriodicJacobi& j, double corner_sign) {
  const int n = j.period();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m(k - 1, k - 1) = j.b_at(k);
    if (k < n) m(k - 1, k) = m(k, k - 1) = j.a_at(k);
  }
  // the wrap-around entry a_N; for N = 2 it lands on the existing off-diagonal
  if (n == 2) {
    m(0, 1) += corner_sign * j.a_at(2);
    m(1, 0) = m(0, 1);
  } else if (n >= 3) {
    m(0, n - 1) = m(n - 1, 0) = corner_sign * j.a_at(n);
  }
  return m;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  return out;
}

}  // namespace

std::vector<RealPolynomial> first_kind_polynomials(const PeriodicJacobi& j, int upto) {
  return three_term(j, upto, RealPolynomial{}, RealPolynomial{1.0});
}

std::vector<RealPolynomial> second_kind_polynomials(const PeriodicJacobi& j, int upto) {
  return three_term(j, upto, RealPolynomial{-1.0}, RealPolynomial{});
}

Eigen::Matrix2d transfer_matrix(const PeriodicJacobi& j, double lambda, int n) {
  if (n < 1) throw std::invalid_argument("transfer matrix needs n >= 1");
  Eigen::Matrix2d t = Eigen::Matrix2d::Identity();
  for (int k = 1; k <= n; ++k) {
    const double a = j.a_at(k);
    Eigen::Matrix2d s;
    s << (lambda - j.b_at(k)) / a, -1.0 / a, a, 0.0;
    t = s * t;
  }
  return t;
}

RealPolynomial discriminant(const PeriodicJacobi& j) {
  const int n = j.period();
  const auto p = first_kind_polynomials(j, n + 1);
  const auto q = second_kind_polynomials(j, n + 1);
  return p[n + 1] - q[n] * j.a_at(n);
}

RealPolynomial gamma_polynomial(const PeriodicJacobi& j) {
  const int n = j.period();
  const auto p = first_kind_polynomials(j, n + 1);
  const auto q = second_kind_polynomials(j, n + 1);
  return p[n + 1] + q[n] * j.a_at(n);
}

BandStructure essential_bands(const PeriodicJacobi& j) {
  const int n = j.period();
  std::vector<double> edges;
  if (n == 1) {
    edges = {j.b_at(1) - 2 * j.a_at(1), j.b_at(1) + 2 * j.a_at(1)};
  } else {
    edges = symmetric_eigenvalues(floquet_matrix(j, 1.0));
    auto minus = symmetric_eigenvalues(floquet_matrix(j, -1.0));
    edges.insert(edges.end(), minus.begin(), minus.end());
  }
  std::sort(edges.begin(), edges.end());
  BandStructure out;
  for (int k = 0; k < n; ++k) out.bands.push_back({edges[2 * k], edges[2 * k + 1]});
  for (int k = 1; k < n; ++k) {
    Gap g;
    double lo = out.bands[k - 1].hi, hi = out.bands[k].lo;
    g.open = hi - lo >= kClosedGapTol;
    if (!g.open) {
      // snap touching bands to a common edge
      const double mid = 0.5 * (lo + hi);
      out.bands[k - 1].hi = out.bands[k].lo = lo = hi = mid;
    }
    g.span = {lo, hi};
    g.index_from_right = n - k;
    g.sign = (g.index_from_right % 2 == 1) ? -1 : 1;
    out.gaps.push_back(g);
  }
  return out;
}

std::string to_string(GapRootClass c) {
  switch (c) {
    case GapRootClass::eigenvalue: return "eigenvalue";
    case GapRootClass::rejected: return "rejected";
    case GapRootClass::edge: return "edge";
    case GapRootClass::closed_gap: return "closed-gap";
    case GapRootClass::indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::vector<GapRoot> classify_gap_roots(const PeriodicJacobi& j) {
  const int n = j.period();
  if (n == 1) return {};
  Eigen::MatrixXd trunc = Eigen::MatrixXd::Zero(n - 1, n - 1);
  for (int k = 1; k < n; ++k) {
    trunc(k - 1, k - 1) = j.b_at(k);
    if (k < n - 1) trunc(k - 1, k) = trunc(k, k - 1) = j.a_at(k);
  }
  const auto roots = symmetric_eigenvalues(trunc);
  const BandStructure bs = essential_bands(j);
  const RealPolynomial gamma = gamma_polynomial(j);
  std::vector<GapRoot> out;
  for (double r : roots) {
    GapRoot gr;
    gr.lambda = r;
    gr.gamma = gamma(r);
    // each gap closure holds exactly one root of p_N; pick the nearest closure
    const Gap* best = nullptr;
    double best_d = INFINITY;
    for (const auto& g : bs.gaps) {
      const double d = std::max({0.0, g.span.lo - r, r - g.span.hi});
      if (d < best_d) {
        best_d = d;
        best = &g;
      }
    }
    gr.gap_index_from_right = best->index_from_right;
    const double scale = std::max(1.0, max_abs_coeff(gamma) * std::pow(std::max(1.0, std::abs(r)), gamma.degree()));
    if (!best->open) {
      gr.cls = GapRootClass::closed_gap;
    } else if (r <= best->span.lo + kEdgeTol || r >= best->span.hi - kEdgeTol) {
      gr.cls = GapRootClass::edge;
    } else if (std::abs(gr.gamma) <= 1e-12 * scale) {
      gr.cls = GapRootClass::indeterminate;
    } else {
      const int sg = gr.gamma > 0 ? 1 : -1;
      gr.cls = (sg == -best->sign) ? GapRootClass::eigenvalue : GapRootClass::rejected;
    }
    out.push_back(gr);
  }
  return out;
}

std::vector<double> gap_eigenvalues(const PeriodicJacobi& j) {
  std::vector<double> out;
  for (const auto& r : classify_gap_roots(j))
    if (r.cls == GapRootClass::eigenvalue) out.push_back(r.lambda);
  return out;
}

double weyl_function(const PeriodicJacobi& j, double lambda) {
  const int n = j.period();
  const BandStructure bs = essential_bands(j);
  for (const auto& b : bs.bands)
    if (lambda >= b.lo && lambda <= b.hi) throw std::domain_error("Weyl function requested inside a band");
  int s = 0;
  if (lambda > bs.bands.back().hi) s = 1;
  else if (lambda < bs.bands.front().lo) s = (n % 2 == 0) ? 1 : -1;
  else
    for (const auto& g : bs.gaps)
      if (lambda > g.span.lo && lambda < g.span.hi) s = g.sign;
  const auto p = first_kind_polynomials(j, n);
  const double pn = p[n](lambda);
  if (std::abs(pn) < 1e-14) throw std::domain_error("pole of the Weyl function");
  const double d = discriminant(j)(lambda);
  const double g = gamma_polynomial(j)(lambda);
  return (-g + s * std::sqrt(std::max(0.0, d * d - 4.0))) / (2.0 * j.a_at(n) * pn);
}

}  // namespace gspec
