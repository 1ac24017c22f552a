#include <doctest.h>

#include <cmath>
#include <random>

#include "gspec/catalog.hpp"
#include "gspec/schur.hpp"

using namespace gspec;

namespace {

WeightedGraph random_connected(std::mt19937& rng, int n) {
  std::vector<Edge> e;
  for (int v = 2; v <= n; ++v) e.push_back({static_cast<int>(rng() % (v - 1)) + 1, v, 1.0});
  std::bernoulli_distribution extra(0.3);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (extra(rng)) {
        bool dup = false;
        for (const auto& x : e) dup = dup || (x.i == i && x.j == j);
        if (!dup) e.push_back({i, j, 1.0});
      }
  return build_from_edges(n, e);
}

}  // namespace

TEST_CASE("Schwenk recursion equals the determinant") {
  CHECK(to_real(schwenk_characteristic(build_complete(3))) == RealPolynomial{-2.0, -3.0, 0.0, 1.0});
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    const auto g = random_connected(rng, 3 + t % 10);
    CHECK(max_coeff_diff(to_real(schwenk_characteristic(g)), characteristic_polynomial(adjacency_matrix(g))) < 1e-9);
  }
  // flower closed form: Q * (lambda - 2 sum (Q_{k-1} + 1) / Q_k), Q = prod Q_k, Q_k = char. poly of P_k
  const std::vector<int> ks{2, 3, 4};
  RealPolynomial q{1.0}, sum;
  std::vector<RealPolynomial> qk;
  for (int k : ks) {
    qk.push_back(scale_argument(chebyshev_u(k), 0.5));
    q = q * qk.back();
  }
  RealPolynomial rhs = q * RealPolynomial{0.0, 1.0};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    RealPolynomial rest{1.0};
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (j != i) rest = rest * qk[j];
    rhs -= (scale_argument(chebyshev_u(ks[i] - 1), 0.5) + RealPolynomial{1.0}) * rest * 2.0;
  }
  CHECK(max_coeff_diff(to_real(schwenk_characteristic(build_flower({3, 4, 5}))), rhs) < 1e-12);
  CHECK_THROWS(schwenk_characteristic(build_star({1.0, 2.0})));
}

TEST_CASE("Schwenk on every unweighted catalog graph") {
  for (const auto& f : fixture_catalog()) {
    const auto* tg = std::get_if<TailedGraph>(&f.spec);
    if (!tg || !tg->finite.unit_weights()) continue;
    CHECK_MESSAGE(max_coeff_diff(to_real(schwenk_characteristic(tg->finite)), characteristic_polynomial(adjacency_matrix(tg->finite))) < 1e-9,
                  f.name);
  }
}

TEST_CASE("Green's functions") {
  const auto g1 = greens_function_finite(build_path(1), 1);
  CHECK(g1.numerator == RealPolynomial{1.0});
  CHECK(g1.denominator == RealPolynomial{0.0, 1.0});
  const auto g2 = greens_function_finite(build_path(2), 2);
  CHECK(g2.numerator == RealPolynomial{0.0, 1.0});
  CHECK(g2.denominator == RealPolynomial{-1.0, 0.0, 1.0});
  std::mt19937 rng(77);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_connected(rng, 3 + t % 8);
    const int v = 1 + static_cast<int>(rng() % g.order());
    const auto gd = greens_function_finite(g, v);
    const Eigen::MatrixXd a = adjacency_matrix(g);
    const Eigen::MatrixXd b = adjacency_matrix(delete_vertices(g, {v}).graph);
    CHECK(max_coeff_diff(gd.denominator, characteristic_polynomial(a)) < 1e-8);
    CHECK(max_coeff_diff(gd.numerator, characteristic_polynomial(b)) < 1e-8);
    // poles and zeros interlace
    const Eigen::VectorXd lam = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues();
    const Eigen::VectorXd mu = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(b).eigenvalues();
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
      CHECK(mu[k] >= lam[k] - 1e-9);
      CHECK(mu[k] <= lam[k + 1] + 1e-9);
      CHECK(std::abs(gd.numerator(mu[k])) < 1e-6 * std::max(1.0, max_abs_coeff(gd.numerator)));
    }
  }
}

TEST_CASE("discrete spectrum from the main equation") {
  for (int n = 3; n <= 8; ++n) {
    const auto e = schur_discrete_spectrum(build_complete(n), n);
    REQUIRE(e.size() == 1);
    const double x6 = 0.5 * (std::sqrt((n + 2.0) / (n - 2.0)) - 1.0);
    CHECK(std::abs(e[0].x - x6) < 1e-12);
    CHECK(std::abs(e[0].lambda - (x6 + 1 / x6)) < 1e-10);
    const auto s = schur_discrete_spectrum(build_star(std::vector<double>(n, 1.0)), n + 1);
    REQUIRE(s.size() == 2);
    const double r = std::sqrt(n - 1.0);
    CHECK(std::abs(s[1].lambda - (r + 1 / r)) < 1e-10);
    CHECK(std::abs(s[0].lambda + (r + 1 / r)) < 1e-10);
  }
  CHECK(schur_discrete_spectrum(build_path(5), 5).empty());
}

TEST_CASE("multiple eigenvalues off [-2,2] persist") {
  // two K_5 blocks joined through a path: 4 is a double eigenvalue of the union,
  // one copy survives in the complement of the attachment vertex's orbit
  const auto a = build_complete(5);
  const auto g = couple(couple(a, 5, build_path(1), 1, 1.0), 6, a, 5, 1.0);
  const auto spec = make_tailed(g, {TailSpec{6, 1.0, {}}});
  const auto e = schur_discrete_spectrum(g, 6);
  const Spectrum c = canonical_spectrum(spec);
  std::vector<double> want;
  for (const auto& x : c.eigenvalues)
    if (std::abs(x.value) > 2) want.push_back(x.value);
  REQUIRE(e.size() == want.size());
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(std::abs(e[i].lambda - want[i]) < 1e-9);
  bool four = false;
  for (const auto& x : e) four = four || (std::abs(x.lambda - 4.0) < 1e-9 && x.multiplicity >= 1);
  CHECK(four);
}

TEST_CASE("flower equations") {
  for (int n = 2; n <= 6; ++n) {
    const auto [lm, lp] = flower_discrete_spectrum(std::vector<int>(n, 2));
    const double d = std::sqrt(8.0 * n - 3), q = 2.0 * (2 * n - 1);
    const double x4 = (-1 + d) / q, x5 = (-1 - d) / q;
    CHECK(std::abs(lp - (x4 + 1 / x4)) < 1e-9);
    CHECK(std::abs(lm - (x5 + 1 / x5)) < 1e-9);
  }
  const auto [lm, lp] = flower_discrete_spectrum({2, 2});
  const auto s = schur_discrete_spectrum(build_flower({3, 3}), 5);
  REQUIRE(s.size() == 2);
  CHECK(std::abs(s[0].lambda - lm) < 1e-9);
  CHECK(std::abs(s[1].lambda - lp) < 1e-9);
  const auto [m2, p2] = flower_discrete_spectrum({3, 4, 6});
  const auto s2 = schur_discrete_spectrum(build_flower({4, 5, 7}), 14);
  REQUIRE(s2.size() == 2);
  CHECK(std::abs(s2[0].lambda - m2) < 1e-9);
  CHECK(std::abs(s2[1].lambda - p2) < 1e-9);
  CHECK_THROWS(flower_discrete_spectrum({1}));
}
