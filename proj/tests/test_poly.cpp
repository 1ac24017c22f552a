#include <doctest.h>

#include <cmath>
#include <random>

#include "gspec/poly.hpp"

using namespace gspec;

namespace {

RealPolynomial from_roots(const std::vector<double>& roots, double lead = 1.0) {
  RealPolynomial p = RealPolynomial::constant(lead);
  for (double r : roots) p = p * RealPolynomial{-r, 1.0};
  return p;
}

Eigen::MatrixXd path_adjacency(int p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i + 1 < p; ++i) m(i, i + 1) = m(i + 1, i) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("chebyshev polynomials") {
  CHECK(chebyshev_t(0) == RealPolynomial{1.0});
  CHECK(chebyshev_t(4) == RealPolynomial{1.0, 0.0, -8.0, 0.0, 8.0});
  CHECK(chebyshev_t(5) == RealPolynomial{0.0, 5.0, 0.0, -20.0, 0.0, 16.0});
  CHECK(chebyshev_u(0) == RealPolynomial{1.0});
  CHECK(chebyshev_u(3) == RealPolynomial{0.0, -4.0, 0.0, 8.0});
  CHECK(chebyshev_u(5) == RealPolynomial{0.0, 6.0, 0.0, -32.0, 0.0, 32.0});
  CHECK_THROWS(chebyshev_t(-1));
}

TEST_CASE("chebyshev recurrences and the Pell identity") {
  const RealPolynomial two_x{0.0, 2.0};
  for (int n = 1; n < 20; ++n) {
    CHECK((chebyshev_t(n + 1) - two_x * chebyshev_t(n) + chebyshev_t(n - 1)).is_zero());
    CHECK((chebyshev_u(n + 1) - two_x * chebyshev_u(n) + chebyshev_u(n - 1)).is_zero());
  }
  const RationalPolynomial x2m1{Rational(-1), Rational(0), Rational(1)};
  for (int n = 1; n <= 10; ++n) {
    const auto t = chebyshev_t_as<Rational>(n), u = chebyshev_u_as<Rational>(n - 1);
    CHECK(t * t - x2m1 * u * u == RationalPolynomial{Rational(1)});
  }
}

TEST_CASE("descartes bound") {
  CHECK(descartes_bound(RealPolynomial{2.0, -3.0, 1.0}) == 2);
  CHECK(descartes_bound(RealPolynomial{1.0, 0.0, 1.0}) == 0);
  CHECK(descartes_bound(RealPolynomial{-1.0, 0.0, 2.0, 0.0, 2.0, 0.0, 2.0}) == 1);
  CHECK_THROWS(descartes_bound(RealPolynomial{}));
}

TEST_CASE("descartes bound against known factorizations") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> root(-3.0, 3.0);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> roots;
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) roots.push_back(std::round(root(rng) * 8.0) / 8.0 + 1.0 / 16.0);
    const RealPolynomial p = from_roots(roots, trial % 2 ? 1.0 : -2.0);
    const auto iso = real_roots_in_interval(p, make_interval(0.0, 1e6));
    int positive = 0;
    for (const auto& r : iso.roots) positive += r.multiplicity;
    const int slack = descartes_bound(p) - positive;
    CHECK(slack >= 0);
    CHECK(slack % 2 == 0);
  }
}

TEST_CASE("real roots in an interval") {
  auto r = real_roots_in_interval(RealPolynomial{1.0, 1.0, -1.0}, make_interval(-1.0, 1.0));
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0].value == doctest::Approx((1.0 - std::sqrt(5.0)) / 2).epsilon(1e-13));
  CHECK(real_roots_in_interval(RealPolynomial{1.0, 0.0, 1.0}, make_interval(-1.0, 1.0)).roots.empty());
  r = real_roots_in_interval(RealPolynomial{1.0, -1.0, -1.0, -1.0}, make_interval(-1.0, 1.0));
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0].value == doctest::Approx(0.5436890126920764).epsilon(1e-12));
  CHECK_THROWS(real_roots_in_interval(RealPolynomial{}, make_interval(-1.0, 1.0)));
}

TEST_CASE("roots at an endpoint are boundary suspects, repeated roots carry multiplicity") {
  // (x-1)(x+0.5)^2
  const RealPolynomial p = from_roots({1.0, -0.5, -0.5});
  const auto r = real_roots_in_interval(p, make_interval(-1.0, 1.0));
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0].value == doctest::Approx(-0.5));
  CHECK(r.roots[0].multiplicity == 2);
  REQUIRE(r.boundary_suspect.size() == 1);
  CHECK(r.boundary_suspect[0].value == doctest::Approx(1.0));
}

TEST_CASE("root residual bound") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> co(7);
    for (auto& v : co) v = c(rng);
    const RealPolynomial p(co);
    const double tol = kDefaultRootTol;
    for (const auto& r : real_roots_in_interval(p, make_interval(-3.0, 3.0), tol).roots) {
      double scale = 0.0;
      for (double v : p.coeffs()) scale = std::max(scale, std::abs(v));
      // a tol-accurate root leaves a residual of order |p'| tol
      const double bound = std::max(tol * scale * std::pow(std::max(1.0, std::abs(r.value)), p.degree()),
                                    std::abs(p.derivative()(r.value)) * tol * 4);
      CHECK(std::abs(p(r.value)) <= bound);
    }
  }
}

TEST_CASE("joukowski map and its inverse") {
  CHECK(joukowski(1.0) == 2.0);
  CHECK(joukowski(1.0 / 2.0) == doctest::Approx(2.5));
  CHECK(joukowski(-1.0 / std::sqrt(3.0)) == doctest::Approx(-4.0 / std::sqrt(3.0)));
  CHECK_THROWS(joukowski(0.0));
  CHECK(joukowski_inverse_in_disk(2.5) == doctest::Approx(0.5));
  CHECK(joukowski_inverse_in_disk(std::sqrt(5.0)) == doctest::Approx((std::sqrt(5.0) - 1) / 2));
  CHECK(joukowski_inverse_in_disk(-2.5) == doctest::Approx(-0.5));
  CHECK_THROWS(joukowski_inverse_in_disk(1.9));
  for (double z = -0.99; z < 1.0; z += 0.0137)
    if (std::abs(z) > 1e-9) CHECK(std::abs(joukowski_inverse_in_disk(joukowski(z)) - z) < 1e-12);
}

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_polynomial(path_adjacency(2)) == RealPolynomial{-1.0, 0.0, 1.0});
  Eigen::MatrixXd c3 = Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3);
  CHECK(characteristic_polynomial(c3) == RealPolynomial{-2.0, -3.0, 0.0, 1.0});
  for (int p = 1; p <= 8; ++p) {
    // U_p(x/2)
    const RealPolynomial u = scale_argument(chebyshev_u(p), 0.5);
    CHECK(max_coeff_diff(characteristic_polynomial(path_adjacency(p)), u) < 1e-12);
    const auto roots = real_roots_in_interval(u, make_interval(-2.1, 2.1)).roots;
    REQUIRE(static_cast<int>(roots.size()) == p);
    for (int j = 1; j <= p; ++j)
      CHECK(roots[p - j].value == doctest::Approx(2 * std::cos(M_PI * j / (p + 1))).epsilon(1e-12));
  }
  CHECK_THROWS(characteristic_polynomial(Eigen::MatrixXd::Zero(2, 3)));
  // irrational entries go through the floating route
  Eigen::MatrixXd w(2, 2);
  w << 0.0, std::sqrt(2.0), std::sqrt(2.0), 0.0;
  CHECK(max_coeff_diff(characteristic_polynomial(w), RealPolynomial{-2.0, 0.0, 1.0}) < 1e-12);
}

TEST_CASE("polynomial arithmetic") {
  const RealPolynomial a{1.0, 2.0, 3.0}, b{0.0, 1.0};
  const auto [q, r] = divmod(a, b);
  CHECK(q == RealPolynomial{2.0, 3.0});
  CHECK(r == RealPolynomial{1.0});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(RealPolynomial{1.0, 0.0, 0.0}.degree() == 0);
  CHECK(joukowski_clear(RealPolynomial{0.0, 1.0}, 1) == RealPolynomial{1.0, 0.0, 1.0});
  const auto sf = square_free_decomposition(to_rational(from_roots({1.0, 1.0, 2.0})));
  REQUIRE(sf.size() == 2);
  CHECK(sf[1].second == 2);
}
