#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gspec/asymptotics.hpp"

using namespace gspec;
using C = std::complex<double>;

namespace {

TailedGraph star_with_tail(int n) { return make_tailed(build_star(std::vector<double>(n, 1.0)), {TailSpec{n + 1, 1.0, {}}}); }

double nearest(const std::vector<double>& ev, double x) {
  double best = INFINITY;
  for (double e : ev) best = std::min(best, std::abs(e - x));
  return best;
}

}  // namespace

TEST_CASE("finite sections") {
  for (int p : {1, 2, 5, 17}) {
    const auto ev = section_eigenvalues(FiniteRankJacobi{}, p);
    REQUIRE(static_cast<int>(ev.size()) == p);
    for (int j = 1; j <= p; ++j)
      CHECK(std::abs(ev[p - j] - 2 * std::cos(std::numbers::pi * j / (p + 1))) < 1e-12);
  }
  CHECK(section_eigenvalues(FiniteRankJacobi({0.3, -1.0}, {2.0}), 1) == std::vector<double>{0.3});
  const FiniteSection fs = finite_section(FiniteRankJacobi({0.3, -1.0}, {2.0}), 3);
  CHECK(fs.matrix(0, 1) == 2.0);
  CHECK(fs.matrix(1, 1) == -1.0);
  CHECK(fs.matrix(1, 2) == 1.0);
  CHECK_THROWS_WITH(section_eigenvalues(FiniteRankJacobi{}, kOracleCap + 1), doctest::Contains("oracle size cap"));
  CHECK_THROWS(section_eigenvalues(FiniteRankJacobi{}, 0));

  const auto star = section_eigenvalues(star_with_tail(5), 1500);
  CHECK(std::abs(star.back() - 2.5) < 1e-6);
  CHECK(std::abs(star.front() + 2.5) < 1e-6);
}

TEST_CASE("inertia counts agree with dense sections") {
  const TailedGraph tg = make_tailed(build_complete(4), {TailSpec{4, 1.0, {}}, TailSpec{2, 0.5, {2.0}}});
  for (int n : {4, 9, 30}) {
    const auto ev = section_eigenvalues(tg, n);
    // half-integer shifts hit exact zero pivots in the tails
    std::vector<double> shifts{-2.3, -1.0 + 1e-7, 0.1, 1.7, 3.2};
    for (int k = -8; k <= 12; ++k) shifts.push_back(0.5 * k);
    for (double s : shifts) {
      if (nearest(ev, s) < 1e-9) continue;  // a shift on an eigenvalue: either answer is rounding
      const int dense = static_cast<int>(std::count_if(ev.begin(), ev.end(), [s](double x) { return x < s; }));
      CHECK(tailed_section_count_below(tg, n, s) == dense);
    }
    const auto in = tailed_section_eigenvalues_in(tg, n, 2.0, 6.0);
    std::vector<double> want;
    for (double x : ev)
      if (x > 2.0 && x < 6.0) want.push_back(x);
    REQUIRE(in.size() == want.size());
    for (std::size_t i = 0; i < in.size(); ++i) CHECK(std::abs(in[i] - want[i]) < 1e-10);
  }
}

TEST_CASE("finite-section convergence to a discrete eigenvalue") {
  const TailedGraph tg = star_with_tail(5);
  double prev = INFINITY;
  // geometric convergence, error ~ 4^-n; past n ~ 25 it is at rounding level
  for (int n : {6, 12, 24}) {
    const double e = nearest(tailed_section_eigenvalues_in(tg, n, 2.1, 3.0), 2.5);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(nearest(tailed_section_eigenvalues_in(tg, 2000, 2.1, 3.0), 2.5) <= 1e-5);
  // hidden eigenvalue 0 with multiplicity n-1 at every order past n
  for (int n = 7; n <= 40; ++n) {
    const int c = tailed_section_count_below(tg, n, 1e-9) - tailed_section_count_below(tg, n, -1e-9);
    CHECK(c >= 4);
  }
}

TEST_CASE("Toeplitz extremes approach the symbol range") {
  const auto [lo, hi] = toeplitz_extreme_eigenvalues({{1, 1}}, 4000);
  CHECK(std::abs(lo + 2.25) < 5e-2);
  CHECK(std::abs(hi - 4.0) < 5e-2);
  const auto ev = section_eigenvalues(ToeplitzSpec{{1, 1}}, 60);
  const auto [l60, h60] = toeplitz_extreme_eigenvalues({{1, 1}}, 60);
  CHECK(std::abs(l60 - ev.front()) < 1e-9);
  CHECK(std::abs(h60 - ev.back()) < 1e-9);
}

TEST_CASE("two-sided perturbation determinants") {
  const TwoSidedPerturbation empty;
  const TwoSidedPerturbation bump{{{0, PerturbationKind::diagonal, 1.0}}};
  const auto chain = sparse_cycle_chain_right_limits(true).at(1);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> r(-0.9, 0.9);
  for (int t = 0; t < 20; ++t) {
    const C z(r(rng), r(rng) * 0.4);
    if (std::abs(z) < 0.05) continue;
    CHECK(std::abs(two_sided_perturbation_determinant(empty, z) - 1.0) < 1e-15);
    CHECK(std::abs(two_sided_perturbation_determinant(bump, z) - (z * z + z - 1.0) / (z * z - 1.0)) < 1e-12);
    const C want = (3.0 * z * z - 1.0) / (z * z - 1.0);
    CHECK(std::abs(two_sided_perturbation_determinant(chain, z) - want) < 1e-12);
    CHECK(std::abs(cycle_chain_kappa_determinant(z) - want) < 1e-12);
    // the numerator polynomial over (z^2-1)^k reproduces the determinant
    for (const auto* p : {&bump, &chain}) {
      const RealPolynomial num = two_sided_determinant_numerator(*p);
      const int k = num.degree() / 2;
      CHECK(std::abs(num(z) / std::pow(z * z - 1.0, k) - two_sided_perturbation_determinant(*p, z)) < 1e-10);
    }
  }
  const auto e = two_sided_eigenvalues(bump);
  REQUIRE(e.size() == 1);
  CHECK(std::abs(e[0].lambda - std::sqrt(5.0)) < 1e-12);
  CHECK(two_sided_eigenvalues(empty).empty());
}

TEST_CASE("sparse families") {
  const Spectrum l = sparse_ladder_essential_spectrum({1, 2, 4, 8, 16});
  REQUIRE(l.eigenvalues.size() == 2);
  CHECK(std::abs(l.eigenvalues[0].value + std::sqrt(5.0)) < 1e-12);
  CHECK(std::abs(l.eigenvalues[1].value - std::sqrt(5.0)) < 1e-12);
  REQUIRE(l.support().size() == 1);
  CHECK(l.support()[0].lo == -2.0);
  CHECK(l.support()[0].hi == 2.0);
  const Spectrum c = sparse_cycle_chain_essential_spectrum({2, 4, 8});
  REQUIRE(c.eigenvalues.size() == 2);
  CHECK(std::abs(c.eigenvalues[0].value + 4 / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(c.eigenvalues[1].value - 4 / std::sqrt(3.0)) < 1e-12);
  CHECK(sparse_ladder_essential_spectrum({}).eigenvalues.empty());
  CHECK(sparse_cycle_chain_essential_spectrum({}).eigenvalues.empty());
  CHECK(sparse_cycle_chain_essential_spectrum({}).support().size() == 1);
}

TEST_CASE("Simon-Stolz partial sums") {
  CHECK(simon_stolz_partial_sums(FiniteRankJacobi{}, 0.5, 0).empty());
  CHECK_THROWS(simon_stolz_partial_sums(FiniteRankJacobi{}, 2.0, 10));
  CHECK_THROWS(simon_stolz_partial_sums(ToeplitzSpec{{1}}, 0.5, 10));
  const auto free = simon_stolz_partial_sums(FiniteRankJacobi{}, 0.5, 4000);
  for (std::size_t k = 1; k < free.size(); ++k) CHECK(free[k] > free[k - 1]);
  // bounded transfer matrices: linear growth
  const double slope1 = free[1999] / 2000, slope2 = free[3999] / 4000;
  CHECK(slope1 > 0.05);
  CHECK(std::abs(slope2 / slope1 - 1.0) < 0.1);
  std::vector<int> rungs;
  for (int k = 0; k < 8; ++k) rungs.push_back(1 << k);
  const auto sparse = simon_stolz_partial_sums(SparseLadderSpec{1, rungs}, 0.5, 256);
  for (std::size_t k = 1; k < sparse.size(); ++k) CHECK(sparse[k] > sparse[k - 1]);
}

TEST_CASE("Toeplitz and comb spectra") {
  CHECK(max_coeff_diff(toeplitz_symbol_polynomial({{1, 1}}), RealPolynomial{-2.0, 2.0, 4.0}) < 1e-15);
  auto band = [](const Spectrum& s) {
    REQUIRE(s.support().size() == 1);
    return s.support()[0];
  };
  const Interval t11 = band(banded_toeplitz_spectrum({{1, 1}}));
  CHECK(std::abs(t11.lo + 2.25) < 1e-12);
  CHECK(std::abs(t11.hi - 4.0) < 1e-12);
  for (const auto& a : {std::vector<int>{1}, std::vector<int>{0, 1}}) {
    const Interval iv = band(banded_toeplitz_spectrum({a}));
    CHECK(std::abs(iv.lo + 2.0) < 1e-12);
    CHECK(std::abs(iv.hi - 2.0) < 1e-12);
  }
  CHECK_THROWS(banded_toeplitz_spectrum({{2}}));

  const Spectrum comb = comb_spectrum();
  const auto s = comb.support();
  REQUIRE(s.size() == 2);
  const double r2 = std::sqrt(2.0);
  CHECK(s[0].lo == doctest::Approx(-r2 - 1));
  CHECK(s[0].hi == doctest::Approx(-r2 + 1));
  CHECK(s[1].lo == doctest::Approx(r2 - 1));
  CHECK(s[1].hi == doctest::Approx(r2 + 1));
  CHECK(!comb.in_bands(0.0));
  for (const auto& iv : s)
    for (double x : {iv.lo, iv.hi}) CHECK(std::abs(std::abs(x - 1 / x) - 2.0) < 1e-12);
}
