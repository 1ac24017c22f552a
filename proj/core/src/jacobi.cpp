#include "gspec/jacobi.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gspec {

FiniteRankJacobi::FiniteRankJacobi(std::vector<double> b, std::vector<double> a) {
  const std::size_t len = std::max(b.size(), a.size());
  b.resize(len, 0.0);
  a.resize(len, 1.0);
  for (double v : a)
    if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("Jacobi off-diagonal entries must be positive");
  for (double v : b)
    if (!std::isfinite(v)) throw std::invalid_argument("Jacobi diagonal entries must be finite");
  while (!b.empty() && b.back() == 0.0 && a.back() == 1.0) {
    b.pop_back();
    a.pop_back();
  }
  b_ = std::move(b);
  a_ = std::move(a);
}

double FiniteRankJacobi::a_product() const {
  double p = 1.0;
  for (double v : a_) p *= v;
  return p;
}

namespace {

template <class T>
Polynomial<T> divide_by_z(const Polynomial<T>& p) {
  if (p.is_zero()) return p;
  std::vector<T> c(p.coeffs().begin() + 1, p.coeffs().end());
  return Polynomial<T>(std::move(c));
}

// Backward recursion on P_n = (prod_{j>=n} a_j) u_n, which involves only b_n
// and a_n^2:  P_{n-1} = (z + 1/z - b_n) P_n - a_n^2 P_{n+1}.
template <class T>
Polynomial<T> jost_recursion(const std::vector<T>& b, const std::vector<T>& a2) {
  const int q = static_cast<int>(b.size());
  Polynomial<T> next = Polynomial<T>::monomial(q + 1);
  Polynomial<T> cur = Polynomial<T>::monomial(q);
  for (int n = q; n >= 1; --n) {
    Polynomial<T> prev = Polynomial<T>{-b[n - 1], T(1)} * cur + divide_by_z(cur) - next * a2[n - 1];
    next = std::move(cur);
    cur = std::move(prev);
  }
  return cur;
}

constexpr double kSnapTol = 1e-12;
constexpr long kSnapDen = 10000;

}  // namespace

std::optional<RationalPolynomial> jost_numerator_exact(const FiniteRankJacobi& j) {
  std::vector<Rational> b, a2;
  for (int n = 1; n <= j.q(); ++n) {
    auto rb = recognize_rational(j.b_at(n), kSnapTol, kSnapDen);
    auto ra = recognize_rational(j.a_at(n) * j.a_at(n), kSnapTol, kSnapDen);
    if (!rb || !ra) return std::nullopt;
    b.push_back(*rb);
    a2.push_back(*ra);
  }
  return jost_recursion(b, a2);
}

RealPolynomial jost_numerator(const FiniteRankJacobi& j) {
  if (auto exact = jost_numerator_exact(j)) return to_real(*exact);
  std::vector<double> b, a2;
  for (int n = 1; n <= j.q(); ++n) {
    b.push_back(j.b_at(n));
    a2.push_back(j.a_at(n) * j.a_at(n));
  }
  return jost_recursion(b, a2);
}

RealPolynomial jost_polynomial(const FiniteRankJacobi& j) {
  return jost_numerator(j) * (1.0 / j.a_product());
}

std::complex<double> perturbation_determinant(const FiniteRankJacobi& j, std::complex<double> z) {
  using C = std::complex<double>;
  if (std::abs(z) == 0.0 || std::abs(z * z - 1.0) < 1e-14)
    throw std::domain_error("resolvent formula singular");
  const int q = j.q();
  if (q == 0) return {1.0, 0.0};
  const int s = q + 1;
  Eigen::MatrixXcd delta = Eigen::MatrixXcd::Zero(s, s);
  for (int n = 1; n <= q; ++n) {
    delta(n - 1, n - 1) = j.b_at(n);
    delta(n - 1, n) = j.a_at(n) - 1.0;
    delta(n, n - 1) = j.a_at(n) - 1.0;
  }
  const C denom = z - 1.0 / z;
  Eigen::MatrixXcd r(s, s);
  for (int i = 1; i <= s; ++i)
    for (int k = 1; k <= s; ++k) r(i - 1, k - 1) = (std::pow(z, std::abs(i - k)) - std::pow(z, i + k)) / denom;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(s, s) + delta * r;
  return m.determinant();
}

double jost_determinant_identity_check(const FiniteRankJacobi& j, std::complex<double> z) {
  const std::complex<double> l = perturbation_determinant(j, z);
  const std::complex<double> u = jost_polynomial(j)(z);
  return std::abs(u - l / j.a_product());
}

JostAnalysis analyze_jost(const FiniteRankJacobi& j) {
  JostAnalysis out;
  if (j.is_free()) return out;
  const Interval disk{-1.0, 1.0};
  RootIsolation iso;
  if (auto exact = jost_numerator_exact(j))
    iso = real_roots_in_interval(*exact, disk);
  else
    iso = real_roots_in_interval(jost_numerator(j), disk);
  for (const auto& r : iso.roots) {
    if (std::abs(r.value) < 1.0 - kDiskMargin)
      out.eigenvalues.push_back({joukowski(r.value), r.value});
    else
      out.resonances.push_back(r.value);
  }
  for (const auto& r : iso.boundary_suspect) out.resonances.push_back(r.value);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const auto& x, const auto& y) { return x.lambda < y.lambda; });
  return out;
}

std::vector<DiscreteEigenvalue> discrete_spectrum(const FiniteRankJacobi& j) {
  return analyze_jost(j).eigenvalues;
}

double SpectralMeasure::total_mass() const {
  double m = ac_mass;
  for (const auto& [l, s] : masses) m += s;
  return m;
}

SpectralMeasure spectral_measure(const FiniteRankJacobi& j) {
  const RealPolynomial u = jost_polynomial(j);
  const RealPolynomial du = u.derivative();
  SpectralMeasure out;
  auto mod2 = [u](double t) {
    const std::complex<double> v = u(std::polar(1.0, t));
    return std::norm(v);
  };
  out.ac_weight = [mod2](double x) {
    if (!(x > -2.0 && x < 2.0)) return 0.0;
    const double t = std::acos(x / 2.0);
    return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi * mod2(t));
  };
  using boost::math::quadrature::gauss_kronrod;
  out.ac_mass = gauss_kronrod<double, 61>::integrate(
      [mod2](double t) { return 2.0 * std::sin(t) * std::sin(t) / (std::numbers::pi * mod2(t)); }, 0.0,
      std::numbers::pi, 20, 1e-13);
  const double scale = std::max(1.0, max_abs_coeff(u));
  for (const auto& e : discrete_spectrum(j)) {
    const double z = e.z;
    const double u_inv = u(1.0 / z);
    if (std::abs(u_inv) < 1e-14 * scale * std::pow(1.0 / std::abs(z), u.degree()))
      throw std::domain_error("u(1/z_j) vanishes; mass formula undefined");
    const double w = 1.0 - 1.0 / (z * z);
    out.masses.emplace_back(e.lambda, z * w * w / (du(z) * u_inv));
  }
  return out;
}

RealPolynomial jost_modulus_polynomial(const FiniteRankJacobi& j) {
  const RealPolynomial u = jost_polynomial(j);
  const int d = u.degree();
  RealPolynomial q;
  for (int m = 0; m <= d; ++m) {
    double c = 0.0;
    for (int k = 0; k + m <= d; ++k) c += u.coeff(k) * u.coeff(k + m);
    q += scale_argument(chebyshev_t(m), 0.5) * (m == 0 ? c : 2.0 * c);
  }
  return q;
}

Eigen::MatrixXd truncated_matrix(const FiniteRankJacobi& j, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m(k - 1, k - 1) = j.b_at(k);
    if (k < n) m(k - 1, k) = m(k, k - 1) = j.a_at(k);
  }
  return m;
}

}  // namespace gspec
