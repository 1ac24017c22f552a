#include "gspec/asymptotics.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace gspec {

namespace {

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("finite section order must be positive");
  if (n > kOracleCap) throw std::invalid_argument("finite section order exceeds the oracle size cap");
}

double ladder_b(const SparseLadderSpec& s, int n) {
  return std::binary_search(s.rungs.begin(), s.rungs.end(), n) ? static_cast<double>(s.sign) : 0.0;
}

// a_1..a_n of the cycle chain Jacobi form
std::vector<double> chain_a(const SparseCycleChainSpec& s, int n) {
  std::vector<double> a;
  a.reserve(static_cast<std::size_t>(n));
  const double r2 = std::sqrt(2.0);
  for (int nj : s.sizes) {
    if (nj < 2) throw std::invalid_argument("cycle chain sizes must be >= 2");
    a.push_back(r2);
    for (int i = 0; i < nj - 2; ++i) a.push_back(1.0);
    a.push_back(r2);
    if (static_cast<int>(a.size()) >= n) break;
  }
  a.resize(static_cast<std::size_t>(n), 1.0);
  return a;
}

// Diagonal and off-diagonal (length n, last entry is a_n) for Jacobi-type specs.
bool jacobi_coefficients(const OperatorSpec& spec, int n, std::vector<double>& b, std::vector<double>& a) {
  b.assign(static_cast<std::size_t>(n), 0.0);
  a.assign(static_cast<std::size_t>(n), 1.0);
  if (const auto* j = std::get_if<FiniteRankJacobi>(&spec)) {
    for (int k = 1; k <= n; ++k) {
      b[k - 1] = j->b_at(k);
      a[k - 1] = j->a_at(k);
    }
    return true;
  }
  if (const auto* j = std::get_if<PeriodicJacobi>(&spec)) {
    for (int k = 1; k <= n; ++k) {
      b[k - 1] = j->b_at(k);
      a[k - 1] = j->a_at(k);
    }
    return true;
  }
  if (const auto* s = std::get_if<SparseLadderSpec>(&spec)) {
    for (int k = 1; k <= n; ++k) b[k - 1] = ladder_b(*s, k);
    return true;
  }
  if (const auto* s = std::get_if<SparseCycleChainSpec>(&spec)) {
    a = chain_a(*s, n);
    return true;
  }
  return false;
}

Eigen::MatrixXd toeplitz_matrix(const ToeplitzSpec& t, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < t.alpha.size(); ++j) {
    const int d = static_cast<int>(j) + 1;
    for (int i = 0; i + d < n; ++i) m(i, i + d) = m(i + d, i) = t.alpha[j];
  }
  return m;
}

// banded Cholesky of s*(A - sigma I); true when positive definite
bool toeplitz_shift_definite(const ToeplitzSpec& t, int n, double sigma, double s) {
  const int w = static_cast<int>(t.alpha.size());
  // row i keeps L(i, i-w..i)
  std::vector<std::vector<double>> L(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(w) + 1, 0.0));
  auto entry = [&](int i, int k) {  // s*(A - sigma I)(i,k), |i-k| <= w
    const int d = std::abs(i - k);
    if (d == 0) return -s * sigma;
    return s * static_cast<double>(t.alpha[static_cast<std::size_t>(d) - 1]);
  };
  auto l_at = [&](int i, int k) -> double& { return L[i][static_cast<std::size_t>(k - i + w)]; };
  for (int i = 0; i < n; ++i) {
    for (int k = std::max(0, i - w); k <= i; ++k) {
      double sum = entry(i, k);
      for (int m = std::max(0, i - w); m < k; ++m) sum -= l_at(i, m) * l_at(k, m);
      if (k == i) {
        if (!(sum > 0.0)) return false;
        l_at(i, i) = std::sqrt(sum);
      } else {
        l_at(i, k) = sum / l_at(k, k);
      }
    }
  }
  return true;
}

using CPoly = Polynomial<double>;

// Laplace expansion along the first row; the matrices here are at most 4 x 4.
CPoly poly_det(const std::vector<std::vector<CPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return CPoly::constant(1.0);
  if (n == 1) return m[0][0];
  CPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<CPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    CPoly term = m[0][c] * poly_det(minor);
    if (c % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

struct Support {
  std::vector<int> sites;
  Eigen::MatrixXd delta;
};

Support support_of(const TwoSidedPerturbation& p) {
  std::set<int> s;
  for (const auto& e : p.entries) {
    s.insert(e.site);
    if (e.kind == PerturbationKind::offdiagonal) s.insert(e.site + 1);
  }
  Support out;
  out.sites.assign(s.begin(), s.end());
  std::map<int, int> idx;
  for (std::size_t i = 0; i < out.sites.size(); ++i) idx[out.sites[i]] = static_cast<int>(i);
  const int k = static_cast<int>(out.sites.size());
  out.delta = Eigen::MatrixXd::Zero(k, k);
  for (const auto& e : p.entries) {
    if (e.kind == PerturbationKind::diagonal) {
      out.delta(idx[e.site], idx[e.site]) += e.value;
    } else {
      const int i = idx[e.site], j = idx[e.site + 1];
      out.delta(i, j) += e.value;
      out.delta(j, i) += e.value;
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXd section_matrix(const OperatorSpec& spec, int n) {
  check_order(n);
  if (const auto* tg = std::get_if<TailedGraph>(&spec)) return adjacency_matrix(truncate_tailed(*tg, n));
  if (const auto* t = std::get_if<ToeplitzSpec>(&spec)) return toeplitz_matrix(*t, n);
  std::vector<double> b, a;
  jacobi_coefficients(spec, n, b, a);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    m(k, k) = b[k];
    if (k + 1 < n) m(k, k + 1) = m(k + 1, k) = a[k];
  }
  return m;
}

std::vector<double> section_eigenvalues(const OperatorSpec& spec, int n) {
  check_order(n);
  std::vector<double> b, a;
  Eigen::VectorXd ev;
  if (jacobi_coefficients(spec, n, b, a)) {
    Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(b.data(), n);
    Eigen::VectorXd s = Eigen::Map<Eigen::VectorXd>(a.data(), n).head(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, s, Eigen::EigenvaluesOnly);
    ev = es.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(section_matrix(spec, n), Eigen::EigenvaluesOnly);
    ev = es.eigenvalues();
  }
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

FiniteSection finite_section(const OperatorSpec& spec, int n) {
  FiniteSection fs;
  fs.matrix = section_matrix(spec, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fs.matrix, Eigen::EigenvaluesOnly);
  fs.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return fs;
}

int tailed_section_count_below(const TailedGraph& tg, int n, double sigma) {
  check_order(n);
  const int nf = tg.finite.order();
  const int nt = static_cast<int>(tg.tails.size());
  if (n < nf) throw std::invalid_argument("section order below the finite part");
  Eigen::MatrixXd s = adjacency_matrix(tg.finite) - sigma * Eigen::MatrixXd::Identity(nf, nf);
  int count = 0;
  const double tiny = 1e-300;
  for (int t = 0; t < nt; ++t) {
    const TailSpec& ts = tg.tails[static_cast<std::size_t>(t)];
    // positions k with nf + (k-1) nt + t + 1 <= n
    const int len = n - nf - t - 1 < 0 ? 0 : (n - nf - t - 1) / nt + 1;
    if (len == 0) continue;
    auto w = [&ts](int k) {  // weight between positions k and k+1
      return k <= static_cast<int>(ts.tail_weights.size()) ? ts.tail_weights[static_cast<std::size_t>(k) - 1] : 1.0;
    };
    double r = -sigma;
    if (r == 0.0) r = tiny;
    if (r < 0) ++count;
    for (int k = len - 1; k >= 1; --k) {
      r = -sigma - w(k) * w(k) / r;
      if (r == 0.0) r = tiny;
      if (r < 0) ++count;
    }
    s(ts.attach - 1, ts.attach - 1) -= ts.bridge * ts.bridge / r;
  }
  if (nf > 0) {
    // a near-zero tail pivot leaves a huge diagonal entry; eliminate those first
    // (a well-conditioned 1x1 pivot) so the eigensolver never sees them
    const double scale = 1.0 + std::abs(sigma) + adjacency_matrix(tg.finite).cwiseAbs().rowwise().sum().maxCoeff();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < nf; ++i) {
      if (std::abs(s(i, i)) > 1e8 * scale) {
        if (s(i, i) < 0) ++count;
        const Eigen::VectorXd col = s.col(i);
        s -= col * col.transpose() / col(i);
      } else {
        keep.push_back(i);
      }
    }
    if (!keep.empty()) {
      const Eigen::MatrixXd rest = s(keep, keep);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rest, Eigen::EigenvaluesOnly);
      for (Eigen::Index i = 0; i < rest.rows(); ++i)
        if (es.eigenvalues()(i) < 0) ++count;
    }
  }
  return count;
}

std::vector<double> tailed_section_eigenvalues_in(const TailedGraph& tg, int n, double lo, double hi, double tol) {
  std::vector<double> out;
  std::function<void(double, int, double, int)> split = [&](double a, int ca, double b, int cb) {
    if (cb <= ca) return;
    if (b - a <= tol) {
      for (int i = ca; i < cb; ++i) out.push_back(0.5 * (a + b));
      return;
    }
    const double m = 0.5 * (a + b);
    const int cm = tailed_section_count_below(tg, n, m);
    split(a, ca, m, cm);
    split(m, cm, b, cb);
  };
  split(lo, tailed_section_count_below(tg, n, lo), hi, tailed_section_count_below(tg, n, hi));
  return out;
}

std::pair<double, double> toeplitz_extreme_eigenvalues(const ToeplitzSpec& t, int n, double tol) {
  check_order(n);
  double r = 0.0;
  for (int v : t.alpha) r += 2.0 * std::abs(v);
  r += 1.0;
  // max: sigma above the spectrum iff sigma I - A > 0
  double lo = -r, hi = r;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (toeplitz_shift_definite(t, n, mid, -1.0) ? hi : lo) = mid;
  }
  const double top = 0.5 * (lo + hi);
  lo = -r;
  hi = r;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    // A - mid I > 0 means mid below the spectrum
    const bool below = toeplitz_shift_definite(t, n, mid, 1.0);
    (below ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), top};
}

std::complex<double> two_sided_perturbation_determinant(const TwoSidedPerturbation& p, std::complex<double> z) {
  const Support s = support_of(p);
  const int k = static_cast<int>(s.sites.size());
  if (k == 0) return 1.0;
  const std::complex<double> den = z - 1.0 / z;
  Eigen::MatrixXcd r(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r(i, j) = std::pow(z, std::abs(s.sites[i] - s.sites[j])) / den;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(k, k) + s.delta.cast<std::complex<double>>() * r;
  return m.determinant();
}

RealPolynomial two_sided_determinant_numerator(const TwoSidedPerturbation& p) {
  const Support s = support_of(p);
  const std::size_t k = s.sites.size();
  std::vector<std::vector<CPoly>> m(k, std::vector<CPoly>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      CPoly e;
      if (i == j) e = CPoly{-1.0, 0.0, 1.0};
      for (std::size_t l = 0; l < k; ++l) {
        const double d = s.delta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l));
        if (d != 0.0) e += CPoly::monomial(std::abs(s.sites[l] - s.sites[j]) + 1, d);
      }
      m[i][j] = e;
    }
  return poly_det(m);
}

std::vector<DiscreteEigenvalue> two_sided_eigenvalues(const TwoSidedPerturbation& p) {
  std::vector<DiscreteEigenvalue> out;
  RealPolynomial num = two_sided_determinant_numerator(p);
  // strip the (z^2-1) factors, they only carry the band edges
  const RealPolynomial edge{-1.0, 0.0, 1.0};
  while (num.degree() >= 2) {
    auto [q, r] = divmod(num, edge);
    if (max_abs_coeff(r) > 1e-12 * std::max(1.0, max_abs_coeff(num))) break;
    num = q;
  }
  if (num.degree() < 1) return out;
  const RootIsolation iso = real_roots_in_interval(num, make_interval(-1.0, 1.0));
  for (const Root& r : iso.roots) {
    if (std::abs(r.value) >= 1.0 - kDiskMargin || r.value == 0.0) continue;
    out.push_back({joukowski(r.value), r.value});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lambda < y.lambda; });
  return out;
}

std::vector<TwoSidedPerturbation> sparse_ladder_right_limits(int sign, bool rungs_present) {
  std::vector<TwoSidedPerturbation> out{TwoSidedPerturbation{}};
  if (rungs_present) out.push_back({{{0, PerturbationKind::diagonal, static_cast<double>(sign)}}});
  return out;
}

std::vector<TwoSidedPerturbation> sparse_cycle_chain_right_limits(bool cycles_present) {
  std::vector<TwoSidedPerturbation> out{TwoSidedPerturbation{}};
  const double kappa = std::sqrt(2.0) - 1.0;
  if (cycles_present)
    out.push_back({{{-1, PerturbationKind::offdiagonal, kappa}, {0, PerturbationKind::offdiagonal, kappa}}});
  return out;
}

std::complex<double> cycle_chain_kappa_determinant(std::complex<double> z) {
  const double kappa = std::sqrt(2.0) - 1.0;
  const std::complex<double> den = z - 1.0 / z;
  auto r = [&](int i, int j) { return std::pow(z, std::abs(i - j)) / den; };
  // g1 = h2 = e1, g2 = h1 = kappa (e0 + e2)
  const std::complex<double> m11 = kappa * (r(1, 0) + r(1, 2));
  const std::complex<double> m12 = r(1, 1);
  const std::complex<double> m21 = kappa * kappa * (r(0, 0) + r(0, 2) + r(2, 0) + r(2, 2));
  const std::complex<double> m22 = kappa * (r(0, 1) + r(2, 1));
  return (1.0 + m11) * (1.0 + m22) - m12 * m21;
}

namespace {
Spectrum sparse_spectrum(const std::vector<TwoSidedPerturbation>& limits, bool present) {
  SpectrumBuilder sb;
  sb.add_band(make_interval(-2.0, 2.0));
  for (const auto& p : limits)
    for (const auto& e : two_sided_eigenvalues(p)) sb.add_eigenvalue(e.lambda);
  if (present) {
    sb.add_note("points outside [-2,2] are isolated points of the essential spectrum, not eigenvalues");
    sb.add_note("spectrum on (-2,2) is purely singular (stated, not computed)");
  }
  return sb.build();
}
}  // namespace

Spectrum sparse_ladder_essential_spectrum(const std::vector<int>& rungs) {
  const bool present = !rungs.empty();
  SpectrumBuilder sb;
  sb.merge(sparse_spectrum(sparse_ladder_right_limits(1, present), present));
  sb.merge(sparse_spectrum(sparse_ladder_right_limits(-1, present), present));
  Spectrum s = sb.build();
  return s;
}

Spectrum sparse_cycle_chain_essential_spectrum(const std::vector<int>& sizes) {
  const bool present = !sizes.empty();
  return sparse_spectrum(sparse_cycle_chain_right_limits(present), present);
}

std::vector<double> simon_stolz_partial_sums(const OperatorSpec& spec, double lambda, int n) {
  if (std::abs(lambda) >= 2.0) throw std::invalid_argument("Simon-Stolz diagnostic defined on (-2,2)");
  if (n == 0) return {};
  if (n < 0 || n > 100000) throw std::invalid_argument("Simon-Stolz sums limited to 0 <= N <= 100000");
  std::vector<double> b, a;
  if (!jacobi_coefficients(spec, n, b, a))
    throw std::invalid_argument("Simon-Stolz sums need a Jacobi-type operator");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  double log_scale = 0.0;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    Eigen::Matrix2d step;
    step << (lambda - b[k]) / a[k], -1.0 / a[k], a[k], 0.0;
    m = step * m;
    const double nm = m.operatorNorm();
    log_scale += std::log(nm);
    m /= nm;
    sum += std::exp(-2.0 * log_scale);
    out.push_back(sum);
  }
  return out;
}

RealPolynomial toeplitz_symbol_polynomial(const ToeplitzSpec& t) {
  RealPolynomial p;
  for (std::size_t j = 0; j < t.alpha.size(); ++j)
    if (t.alpha[j] != 0) p += chebyshev_t(static_cast<int>(j) + 1) * (2.0 * t.alpha[j]);
  return p;
}

Spectrum banded_toeplitz_spectrum(const ToeplitzSpec& t) {
  for (int v : t.alpha)
    if (v != 0 && v != 1) throw std::invalid_argument("Toeplitz entries must be 0 or 1");
  const RealPolynomial p = toeplitz_symbol_polynomial(t);
  std::vector<double> xs{-1.0, 1.0};
  const RealPolynomial dp = p.derivative();
  if (dp.degree() >= 1)
    for (const Root& r : real_roots_in_interval(to_rational(dp), make_interval(-1.0, 1.0)).roots) xs.push_back(r.value);
  double lo = p(xs[0]), hi = lo;
  for (double x : xs) {
    lo = std::min(lo, p(x));
    hi = std::max(hi, p(x));
  }
  SpectrumBuilder sb;
  sb.add_band(make_interval(lo, hi));
  sb.add_note("spectrum is the range of the symbol on the unit circle");
  return sb.build();
}

Spectrum comb_spectrum() {
  // zeta(x) = x - 1/x in [-2,2]
  const double r2 = std::sqrt(2.0);
  SpectrumBuilder sb;
  sb.add_band(make_interval(-r2 - 1.0, -r2 + 1.0));
  sb.add_band(make_interval(r2 - 1.0, r2 + 1.0));
  return sb.build();
}

}  // namespace gspec
