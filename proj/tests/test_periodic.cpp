#include <doctest.h>

#include <cmath>
#include <random>

#include "gspec/periodic.hpp"

using namespace gspec;

namespace {

const double r2 = std::sqrt(2.0), r17 = std::sqrt(17.0);

PeriodicJacobi free1() { return PeriodicJacobi({0.0}, {1.0}); }
PeriodicJacobi hexagon() { return PeriodicJacobi({1.0, 0.0}, {1.0, 1.0}); }
PeriodicJacobi octagon() { return PeriodicJacobi({1.0, 0.0, 0.0}, {1.0, 1.0, 1.0}); }
PeriodicJacobi octagon_chain() { return PeriodicJacobi({0, 0, 0, 0}, {r2, 1, 1, r2}); }

std::vector<PeriodicJacobi> random_periodic(int count) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> b(-1.0, 1.0), a(0.5, 1.5);
  std::vector<PeriodicJacobi> out;
  for (int t = 0; t < count; ++t) {
    const int n = 1 + t % 5;
    std::vector<double> bb(n), aa(n);
    for (int i = 0; i < n; ++i) {
      bb[i] = b(rng);
      aa[i] = a(rng);
    }
    out.emplace_back(bb, aa);
  }
  return out;
}

}  // namespace

TEST_CASE("first kind polynomials") {
  const auto p = first_kind_polynomials(free1(), 8);
  REQUIRE(p.size() == 9);
  CHECK(p[0].is_zero());
  CHECK(p[1] == RealPolynomial{1.0});
  for (int n = 1; n <= 8; ++n) {
    CHECK(max_coeff_diff(p[n], scale_argument(chebyshev_u(n - 1), 0.5)) < 1e-13);
    CHECK(p[n].degree() == n - 1);
  }
  // a_1 = sqrt2 followed by free entries, inside one long period
  std::vector<double> a(12, 1.0);
  a[0] = r2;
  const auto ps = first_kind_polynomials(PeriodicJacobi(std::vector<double>(12, 0.0), a), 10);
  for (int n = 2; n <= 10; ++n) CHECK(max_coeff_diff(ps[n], scale_argument(chebyshev_t(n - 1), 0.5) * r2) < 1e-12);
  for (const auto& j : random_periodic(10)) {
    const auto pj = first_kind_polynomials(j, 3);
    CHECK(max_coeff_diff(pj[2], RealPolynomial{-j.b()[0] / j.a()[0], 1.0 / j.a()[0]}) < 1e-14);
  }
}

TEST_CASE("second kind polynomials and the Wronskian") {
  const auto q = second_kind_polynomials(free1(), 8);
  CHECK(q[0] == RealPolynomial{-1.0});
  CHECK(q[1].is_zero());
  for (int n = 2; n <= 8; ++n) CHECK(max_coeff_diff(q[n], scale_argument(chebyshev_u(n - 2), 0.5)) < 1e-13);
  auto js = random_periodic(12);
  js.push_back(hexagon());
  for (const auto& j : js) {
    const auto p = first_kind_polynomials(j, 11), qq = second_kind_polynomials(j, 11);
    for (int n = 1; n <= 10; ++n) {
      const RealPolynomial w = (p[n] * qq[n + 1] - p[n + 1] * qq[n]) * j.a_at(n);
      // rounding is relative to the size of the products being cancelled
      const double scale = j.a_at(n) * (max_abs_coeff(p[n]) * max_abs_coeff(qq[n + 1]) + max_abs_coeff(p[n + 1]) * max_abs_coeff(qq[n]));
      CHECK(max_coeff_diff(w, RealPolynomial{1.0}) < 1e-13 * std::max(1.0, scale) * (n + 1));
    }
  }
}

TEST_CASE("transfer matrices") {
  Eigen::Matrix2d t1;
  t1 << 0.7, -1.0, 1.0, 0.0;
  CHECK((transfer_matrix(free1(), 0.7, 1) - t1).norm() < 1e-15);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> lam(-3.0, 3.0);
  for (const auto& j : random_periodic(10)) {
    const auto p = first_kind_polynomials(j, 12), q = second_kind_polynomials(j, 12);
    for (int k = 0; k < 20; ++k) {
      const double l = lam(rng);
      for (int n = 1; n <= 10; ++n) {
        const Eigen::Matrix2d t = transfer_matrix(j, l, n);
        CHECK(std::abs(t.determinant() - 1.0) < 1e-12 * std::max(1.0, t.squaredNorm()));
        // polynomial evaluation error is bounded by eps * sum |c_i| |l|^i
        auto bound = [l](const RealPolynomial& r) {
          double b = 0.0;
          for (int i = 0; i <= r.degree(); ++i) b += std::abs(r.coeff(i)) * std::pow(std::abs(l), i);
          return 1e-13 * std::max(1.0, b);
        };
        CHECK(std::abs(t(0, 0) - p[n + 1](l)) < bound(p[n + 1]));
        CHECK(std::abs(t(0, 1) + q[n + 1](l)) < bound(q[n + 1]));
        CHECK(std::abs(t(1, 0) - j.a_at(n) * p[n](l)) < bound(p[n]));
        CHECK(std::abs(t(1, 1) + j.a_at(n) * q[n](l)) < bound(q[n]));
      }
    }
  }
}

TEST_CASE("discriminants") {
  CHECK(max_coeff_diff(discriminant(hexagon()), RealPolynomial{-2.0, -1.0, 1.0}) < 1e-14);
  CHECK(max_coeff_diff(discriminant(octagon()), RealPolynomial{1.0, -3.0, -1.0, 1.0}) < 1e-14);
  CHECK(max_coeff_diff(discriminant(octagon_chain()), RealPolynomial{2.0, 0.0, -3.0, 0.0, 0.5}) < 1e-13);
  for (const auto& j : random_periodic(10)) {
    const RealPolynomial d = discriminant(j);
    double prod = 1.0;
    for (double a : j.a()) prod *= a;
    CHECK(d.degree() == j.period());
    CHECK(d.leading() == doctest::Approx(1.0 / prod));
  }
}

TEST_CASE("band structures") {
  const auto f = essential_bands(free1());
  REQUIRE(f.bands.size() == 1);
  CHECK(f.bands[0].lo == doctest::Approx(-2.0));
  CHECK(f.bands[0].hi == doctest::Approx(2.0));

  const auto h = essential_bands(hexagon());
  REQUIRE(h.bands.size() == 2);
  CHECK(std::abs(h.bands[0].lo - (1 - r17) / 2) < 1e-12);
  CHECK(std::abs(h.bands[0].hi) < 1e-12);
  CHECK(std::abs(h.bands[1].lo - 1.0) < 1e-12);
  CHECK(std::abs(h.bands[1].hi - (1 + r17) / 2) < 1e-12);

  const auto o = essential_bands(octagon_chain());
  REQUIRE(o.bands.size() == 4);
  const double r6 = std::sqrt(6.0);
  const double want[4][2] = {{-r6, -2}, {-r2, 0}, {0, r2}, {2, r6}};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(o.bands[i].lo - want[i][0]) < 1e-10);
    CHECK(std::abs(o.bands[i].hi - want[i][1]) < 1e-10);
  }
  REQUIRE(o.gaps.size() == 3);
  CHECK(!o.gaps[1].open);
  CHECK(o.gaps[0].open);
  CHECK(o.gaps[2].index_from_right == 1);
  CHECK(o.gaps[2].sign == -1);
  CHECK(o.gaps[1].sign == 1);
}

TEST_CASE("band edges are the roots of D^2 - 4") {
  for (const auto& j : random_periodic(15)) {
    const auto bs = essential_bands(j);
    CHECK(static_cast<int>(bs.bands.size()) == j.period());
    const RealPolynomial d = discriminant(j);
    for (std::size_t i = 0; i < bs.bands.size(); ++i) {
      CHECK(std::abs(std::abs(d(bs.bands[i].lo)) - 2.0) < 1e-8);
      CHECK(std::abs(std::abs(d(bs.bands[i].hi)) - 2.0) < 1e-8);
      CHECK(bs.bands[i].lo < bs.bands[i].hi);
      if (i > 0) CHECK(bs.bands[i - 1].hi <= bs.bands[i].lo + 1e-12);
    }
  }
}

TEST_CASE("gap eigenvalues by the sign rule") {
  CHECK(gap_eigenvalues(hexagon()).empty());
  bool edge = false;
  for (const auto& g : classify_gap_roots(hexagon())) edge = edge || g.cls == GapRootClass::edge;
  CHECK(edge);

  const auto oe = gap_eigenvalues(octagon());
  REQUIRE(oe.size() == 1);
  CHECK(std::abs(oe[0] - (1 + std::sqrt(5.0)) / 2) < 1e-12);
  bool rejected = false;
  for (const auto& g : classify_gap_roots(octagon()))
    if (std::abs(g.lambda - (1 - std::sqrt(5.0)) / 2) < 1e-9) rejected = g.cls == GapRootClass::rejected;
  CHECK(rejected);

  const auto ce = gap_eigenvalues(octagon_chain());
  REQUIRE(ce.size() == 2);
  CHECK(std::abs(ce[0] + std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(ce[1] - std::sqrt(3.0)) < 1e-12);
  bool closed = false;
  for (const auto& g : classify_gap_roots(octagon_chain())) closed = closed || g.cls == GapRootClass::closed_gap;
  CHECK(closed);
}

TEST_CASE("at roots of p_N, D^2 - 4 = gamma^2 and each gap holds one root") {
  for (const auto& j : random_periodic(15)) {
    const RealPolynomial d = discriminant(j), g = gamma_polynomial(j);
    const auto roots = classify_gap_roots(j);
    CHECK(static_cast<int>(roots.size()) == j.period() - 1);
    for (const auto& r : roots) {
      const double dv = d(r.lambda), gv = g(r.lambda);
      CHECK(std::abs(dv * dv - 4 - gv * gv) < 1e-8 * std::max(1.0, gv * gv));
    }
    const auto bs = essential_bands(j);
    for (const auto& gap : bs.gaps) {
      int inside = 0;
      for (const auto& r : roots) inside += r.lambda >= gap.span.lo - 1e-9 && r.lambda <= gap.span.hi + 1e-9;
      CHECK(inside == 1);
    }
  }
}

TEST_CASE("Weyl function") {
  // free case against the semicircle law, by the trapezoid rule in t
  for (double l : {2.5, -3.0, 5.0}) {
    const int m = 4000;
    double s = 0.0;
    for (int i = 1; i < m; ++i) {
      const double t = M_PI * i / m, x = 2 * std::cos(t);
      s += 4 * std::sin(t) * std::sin(t) / (2 * M_PI) / (x - l);
    }
    s *= M_PI / m;
    CHECK(std::abs(weyl_function(free1(), l) - s) < 1e-10);
  }
  CHECK(std::abs(1e3 * weyl_function(free1(), 1e3) + 1.0) <= 0.01);
  for (const auto& j : {hexagon(), octagon(), octagon_chain()}) {
    const int n = j.period();
    const auto p = first_kind_polynomials(j, n + 1), q = second_kind_polynomials(j, n + 1);
    for (double l : {-4.0, 3.7, 6.0}) {
      const double m = weyl_function(j, l);
      const double an = j.a_at(n);
      CHECK(std::abs(an * p[n](l) * m * m + (p[n + 1](l) + an * q[n](l)) * m + q[n + 1](l)) < 1e-9);
      CHECK(std::abs(l * weyl_function(j, l * 100) + 0.01) < 0.01);
    }
  }
  CHECK_THROWS(weyl_function(free1(), 0.5));
  CHECK_THROWS(weyl_function(octagon_chain(), 0.0));
  // sqrt3 is a root of p_4 in a gap of the octagon chain: a pole
  CHECK_THROWS_WITH(weyl_function(octagon_chain(), std::sqrt(3.0)), doctest::Contains("pole"));
}
