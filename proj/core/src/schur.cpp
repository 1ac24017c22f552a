#include "gspec/schur.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace gspec {

namespace {

using Mask = std::uint64_t;

class Schwenk {
 public:
  explicit Schwenk(const WeightedGraph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_), 0) {
    for (const auto& e : g.edges()) {
      adj_[e.i - 1] |= Mask{1} << (e.j - 1);
      adj_[e.j - 1] |= Mask{1} << (e.i - 1);
    }
  }

  RationalPolynomial run() { return poly(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1); }

 private:
  RationalPolynomial poly(Mask s) {
    if (s == 0) return RationalPolynomial::constant(1);
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    const int v = std::countr_zero(s);
    const Mask rest = s & ~(Mask{1} << v);
    RationalPolynomial out = RationalPolynomial::monomial(1) * poly(rest);
    for (Mask nb = adj_[v] & rest; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      out -= poly(rest & ~(Mask{1} << w));
    }
    for (Mask c : cycles(v, s)) out -= poly(s & ~c) * Rational(2);
    memo_.emplace(s, out);
    return out;
  }

  // vertex sets of the simple cycles through v inside s, each cycle once
  std::vector<Mask> cycles(int v, Mask s) {
    std::vector<Mask> out;
    int second = -1;
    std::function<void(int, Mask, int)> dfs = [&](int u, Mask used, int len) {
      for (Mask nb = adj_[u] & s; nb; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        if (w == v && len >= 3 && second < u) {
          out.push_back(used);
          if (out.size() > kCycleCap) throw std::runtime_error("cycle enumeration cap exceeded");
        }
        if (used & (Mask{1} << w)) continue;
        if (len == 1) second = w;
        dfs(w, used | (Mask{1} << w), len + 1);
      }
    };
    dfs(v, Mask{1} << v, 1);
    return out;
  }

  int n_;
  std::vector<Mask> adj_;
  std::unordered_map<Mask, RationalPolynomial> memo_;
};

RationalPolynomial char_poly(const WeightedGraph& g) {
  if (g.order() == 0) return RationalPolynomial::constant(1);
  if (g.unit_weights() && g.order() <= 64) return schwenk_characteristic(g);
  if (auto p = characteristic_polynomial_exact(adjacency_matrix(g))) return *p;
  return to_rational(characteristic_polynomial(adjacency_matrix(g)));
}

// sinh(a t) / sinh(b t), 0 < a, b, safe for large t
double sinh_ratio(double a, double b, double t) {
  return std::exp((a - b) * t) * (-std::expm1(-2.0 * a * t)) / (-std::expm1(-2.0 * b * t));
}

double bisect(const std::function<double(double)>& f) {
  double lo = 1e-12, hi = 40.0;
  if (f(lo) <= 0.0 || f(hi) >= 0.0) throw std::runtime_error("flower equation has no bracketed root");
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RationalPolynomial schwenk_characteristic(const WeightedGraph& g) {
  if (!g.unit_weights()) throw std::invalid_argument("Schwenk recursion needs unit weights");
  if (g.order() > 64) throw std::invalid_argument("Schwenk recursion limited to 64 vertices");
  return Schwenk(g).run();
}

GreensData greens_function_finite(const WeightedGraph& g, int v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex");
  GreensData d;
  d.denominator = to_real(char_poly(g));
  d.numerator = to_real(char_poly(delete_vertices(g, {v}).graph));
  return d;
}

std::vector<SchurEigenvalue> schur_discrete_spectrum(const WeightedGraph& g, int attach) {
  if (!g.has_vertex(attach)) throw std::invalid_argument("unknown attach vertex");
  const int n = g.order();
  const RationalPolynomial p = char_poly(g);
  const RationalPolynomial p1 = char_poly(delete_vertices(g, {attach}).graph);
  // x^n [P(x + 1/x) - x P_1(x + 1/x)]
  RationalPolynomial f = joukowski_clear(p, n);
  if (n > 1) f -= RationalPolynomial::monomial(2) * joukowski_clear(p1, n - 1);
  else f -= RationalPolynomial::monomial(1) * p1;  // P_1 = 1 when g is a single vertex
  std::vector<SchurEigenvalue> out;
  const RootIsolation iso = real_roots_in_interval(f, make_interval(-1.0, 1.0));
  for (const Root& r : iso.roots) {
    if (std::abs(r.value) >= 1.0 - 1e-9 || r.value == 0.0) continue;
    out.push_back({joukowski(r.value), r.value, r.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return out;
}

std::pair<double, double> flower_discrete_spectrum(const std::vector<int>& k) {
  if (k.empty()) throw std::invalid_argument("flower needs at least one petal");
  for (int v : k)
    if (v < 2) throw std::invalid_argument("petal path length must be >= 2");
  // phi_1(t) = e^t on the right, phi_2(t) = e^t on the left
  auto phi1 = [&](double t) {
    double s = 0.0;
    for (int kj : k) s += sinh_ratio(kj, kj + 1, t) + sinh_ratio(1, kj + 1, t);
    return 2.0 * s - std::exp(t);
  };
  auto phi2 = [&](double t) {
    double s = 0.0;
    for (int kj : k) s += sinh_ratio(kj, kj + 1, t) + ((kj + 1) % 2 == 0 ? 1.0 : -1.0) * sinh_ratio(1, kj + 1, t);
    return 2.0 * s - std::exp(t);
  };
  const double tp = bisect(phi1);
  const double tm = bisect(phi2);
  return {-2.0 * std::cosh(tm), 2.0 * std::cosh(tp)};
}

}  // namespace gspec
