#include "gspec/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Sparse>

#include "gspec/asymptotics.hpp"
#include "gspec/reduction.hpp"
#include "gspec/schur.hpp"

namespace gspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

bool plain_ray(const TailSpec& t) {
  return t.bridge == 1.0 && std::all_of(t.tail_weights.begin(), t.tail_weights.end(), [](double w) { return w == 1.0; });
}

std::vector<double> off_band(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& e : s.eigenvalues)
    if (!e.infinite && std::abs(e.value) > 2.0 + 1e-9) out.push_back(e.value);
  std::sort(out.begin(), out.end());
  return out;
}

// eigenvalues of a dense symmetric matrix inside [lo, hi]
int count_in(const std::vector<double>& ev, double lo, double hi) {
  return static_cast<int>(std::upper_bound(ev.begin(), ev.end(), hi) - std::lower_bound(ev.begin(), ev.end(), lo));
}

double nearest(const std::vector<double>& ev, double x) {
  double best = kInf;
  for (double v : ev) best = std::min(best, std::abs(v - x));
  return best;
}

// Sylvester inertia of A - sigma I; window graphs are numbered along the chain, so
// the natural ordering keeps the factor banded
class WindowCounter {
 public:
  explicit WindowCounter(const WeightedGraph& g) : a_(g.order(), g.order()) {
    std::vector<Eigen::Triplet<double>> t;
    for (const auto& e : g.edges()) {
      t.emplace_back(e.i - 1, e.j - 1, e.w);
      t.emplace_back(e.j - 1, e.i - 1, e.w);
    }
    for (int i = 0; i < g.order(); ++i) t.emplace_back(i, i, 0.0);
    a_.setFromTriplets(t.begin(), t.end());
  }
  int below(double sigma) const {
    // a zero pivot means sigma hits a leading minor exactly; nudge and retry
    for (int attempt = 0; attempt < 8; ++attempt, sigma += 1e-14 * (1.0 + std::abs(sigma))) {
      Eigen::SparseMatrix<double> m = a_;
      for (int i = 0; i < m.rows(); ++i) m.coeffRef(i, i) -= sigma;
      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower, Eigen::NaturalOrdering<int>> ldlt(m);
      if (ldlt.info() == Eigen::Success) return static_cast<int>((ldlt.vectorD().array() < 0.0).count());
    }
    throw std::runtime_error("inertia factorization failed");
  }
  std::vector<double> eigenvalues_in(double lo, double hi) const {
    std::vector<double> out;
    split(lo, hi, below(lo), below(hi), out);
    return out;
  }

 private:
  void split(double lo, double hi, int clo, int chi, std::vector<double>& out) const {
    if (chi == clo) return;
    if (hi - lo < 1e-13) {
      for (int k = clo; k < chi; ++k) out.push_back(0.5 * (lo + hi));
      return;
    }
    const double mid = 0.5 * (lo + hi);
    const int cm = below(mid);
    split(lo, mid, clo, cm, out);
    split(mid, hi, cm, chi, out);
  }
  Eigen::SparseMatrix<double> a_;
};

}  // namespace

Method parse_method(const std::string& s) {
  if (s == "canonical") return Method::canonical;
  if (s == "schur") return Method::schur;
  if (s == "both") return Method::both;
  throw std::invalid_argument("unknown method '" + s + "'");
}

Spectrum canonical_spectrum(const InfiniteGraphSpec& spec) {
  if (const auto* f = std::get_if<FamilySpec>(&spec)) return family_spectrum(*f);
  const auto& tg = std::get<TailedGraph>(spec);
  if (tg.tails.size() == 1) return spectrum_of_canonical(reduce_single_tail(tg.finite, tg.tails.front()));
  const int v = tg.tails.front().attach;
  const bool rays = std::all_of(tg.tails.begin(), tg.tails.end(), [v](const TailSpec& t) { return t.attach == v && plain_ray(t); });
  if (!rays)
    throw std::invalid_argument(
        "canonical method handles several tails only as unit rays at one vertex; use a named family "
        "(e.g. cycle-two-tails) for other layouts");
  return spectrum_of_canonical(multi_ray_attach(tg.finite, v, static_cast<int>(tg.tails.size())));
}

bool schur_applicable(const InfiniteGraphSpec& spec, std::string* why) {
  auto no = [why](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const auto* tg = std::get_if<TailedGraph>(&spec);
  if (!tg) return no("Schur method needs an explicit finite graph with one tail");
  if (tg->tails.size() != 1) return no("Schur method needs exactly one tail");
  if (!plain_ray(tg->tails.front())) return no("Schur method needs a unit-weight tail");
  return true;
}

Spectrum schur_spectrum(const InfiniteGraphSpec& spec) {
  std::string why;
  if (!schur_applicable(spec, &why)) throw std::invalid_argument(why);
  const auto& tg = std::get<TailedGraph>(spec);
  SpectrumBuilder sb;
  sb.add_band(make_interval(-2.0, 2.0));
  for (const auto& e : schur_discrete_spectrum(tg.finite, tg.tails.front().attach)) sb.add_eigenvalue(e.lambda, e.multiplicity);
  sb.add_note("Schur method reports eigenvalues off [-2,2] only");
  return sb.build();
}

double discrete_discrepancy(const Spectrum& a, const Spectrum& b) {
  const auto x = off_band(a), y = off_band(b);
  if (x.size() != y.size()) return kInf;
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

OracleCheck finite_section_check(const InfiniteGraphSpec& spec, const Spectrum& s, int n) {
  OracleCheck out;
  std::vector<const Eigenvalue*> disc, hidden;
  for (const auto& e : s.eigenvalues) {
    if (e.infinite) continue;
    (e.cls == EigenClass::discrete ? disc : hidden).push_back(&e);
  }
  constexpr double kWin = 1e-8;
  auto note = [&out](const std::string& m) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += m;
  };

  const TailedGraph* tg = std::get_if<TailedGraph>(&spec);
  TailedGraph from_family;
  FamilyModel model;
  if (const auto* f = std::get_if<FamilySpec>(&spec)) {
    model = family_model(*f);
    if (model.oracle) {
      OperatorSpec op = model.oracle();
      if (auto* t = std::get_if<TailedGraph>(&op)) {
        from_family = *t;
        tg = &from_family;
      }
    }
  }

  if (tg) {
    for (const auto* e : disc) {
      const auto ev = tailed_section_eigenvalues_in(*tg, n, e->value - 1e-3, e->value + 1e-3);
      const double err = nearest(ev, e->value);
      out.max_eigen_error = std::max(out.max_eigen_error, err);
    }
    for (const auto* e : hidden) {
      int c = std::numeric_limits<int>::max();
      for (int m : {n, n + 1}) {
        const int k = tailed_section_count_below(*tg, m, e->value + kWin) - tailed_section_count_below(*tg, m, e->value - kWin);
        c = std::min(c, k);
      }
      if (c != e->multiplicity) {
        out.multiplicities_ok = false;
        note("hidden " + num(e->value) + ": section count " + std::to_string(c) + ", claimed " + std::to_string(e->multiplicity));
      }
    }
    return out;
  }

  auto hidden_count = [&](const auto& count_below, const Eigenvalue& e) { return count_below(e.value + kWin) - count_below(e.value - kWin); };
  auto report = [&](const Eigenvalue& e, int c) {
    if (c == e.multiplicity) return;
    out.multiplicities_ok = false;
    note("hidden " + num(e.value) + ": section count " + std::to_string(c) + ", claimed " + std::to_string(e.multiplicity));
  };

  if (model.window) {
    // smallest window of order >= n, and the next one
    int cells = 1;
    while (model.window(cells).order() < n) cells *= 2;
    int lo = cells / 2, hi = cells;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      (model.window(mid).order() >= n ? hi : lo) = mid;
    }
    const WindowCounter w0(model.window(hi)), w1(model.window(hi + 1));
    auto b0 = [&w0](double x) { return w0.below(x); };
    auto b1 = [&w1](double x) { return w1.below(x); };
    for (const auto* e : disc)
      out.max_eigen_error = std::max(out.max_eigen_error, nearest(w0.eigenvalues_in(e->value - 1e-3, e->value + 1e-3), e->value));
    for (const auto* e : hidden) report(*e, std::min(hidden_count(b0, *e), hidden_count(b1, *e)));
  } else if (model.oracle) {
    std::vector<double> s0 = section_eigenvalues(model.oracle(), n), s1 = section_eigenvalues(model.oracle(), n + 1);
    std::sort(s0.begin(), s0.end());
    std::sort(s1.begin(), s1.end());
    for (const auto* e : disc) out.max_eigen_error = std::max(out.max_eigen_error, nearest(s0, e->value));
    for (const auto* e : hidden)
      report(*e, std::min(count_in(s0, e->value - kWin, e->value + kWin), count_in(s1, e->value - kWin, e->value + kWin)));
  } else {
    throw std::invalid_argument("no finite-section oracle for this input");
  }
  return out;
}

// ---- checker ----

void Checker::worst(const std::string& what, double r) {
  if (r > res_) res_ = r;
  if (r > worst_) {
    worst_ = r;
    if (ok_) detail_ = what;
  }
}

void Checker::value(const std::string& what, double got, double want) {
  want += inject_;
  const double r = std::abs(got - want);
  worst(what + ": got " + num(got) + ", want " + num(want), std::isnan(r) ? kInf : r);
}

void Checker::residual(const std::string& what, double r) { worst(what + ": residual " + num(r), std::isnan(r) ? kInf : std::abs(r)); }

void Checker::require(bool cond, const std::string& what) {
  if (cond || !ok_) return;
  ok_ = false;
  detail_ = what;
}

double default_tolerance() {
  if (const char* env = std::getenv("GRAPH_SPECTRA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) return v;
  }
  return 1e-9;
}

FixtureResult run_fixture(const Fixture& f, double tol, double inject) {
  FixtureResult out;
  Checker c(inject);
  try {
    const Spectrum s = canonical_spectrum(f.spec);
    if (s.eigenvalues.size() != f.points.size()) {
      std::string got;
      for (const auto& e : s.eigenvalues) got += " " + num(e.value);
      c.require(false, "expected " + std::to_string(f.points.size()) + " eigenvalues, got " +
                           std::to_string(s.eigenvalues.size()) + ":" + got);
    } else {
      for (std::size_t i = 0; i < f.points.size(); ++i) {
        const auto& want = f.points[i];
        const auto& got = s.eigenvalues[i];
        const std::string tag = "eigenvalue " + num(want.value);
        c.value(tag, got.value, want.value);
        if (want.multiplicity == 0)
          c.require(got.infinite, tag + " should have infinite multiplicity");
        else
          c.require(!got.infinite && got.multiplicity == want.multiplicity,
                    tag + ": multiplicity " + (got.infinite ? std::string("inf") : std::to_string(got.multiplicity)) +
                        ", want " + std::to_string(want.multiplicity));
        c.require(got.cls == want.cls, tag + ": class " + to_string(got.cls) + ", want " + to_string(want.cls));
      }
    }
    const auto sup = s.support();
    const auto want_sup = f.support.empty() ? std::vector<Interval>{make_interval(-2.0, 2.0)} : f.support;
    if (sup.size() != want_sup.size()) {
      c.require(false, "expected " + std::to_string(want_sup.size()) + " spectral intervals, got " + std::to_string(sup.size()));
    } else {
      for (std::size_t i = 0; i < sup.size(); ++i) {
        c.value("band end", sup[i].lo, want_sup[i].lo);
        c.value("band end", sup[i].hi, want_sup[i].hi);
      }
    }
    for (const auto& n : f.notes)
      c.require(std::any_of(s.notes.begin(), s.notes.end(), [&n](const std::string& x) { return x.find(n) != std::string::npos; }),
                "missing note '" + n + "'");
    if (f.cross_method) c.residual("Schur vs canonical", discrete_discrepancy(s, schur_spectrum(f.spec)));
    if (f.extra) f.extra(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  out.residual = c.max_residual();
  out.pass = c.ok() && out.residual <= tol;
  out.detail = c.ok() ? c.detail() : c.detail();
  return out;
}

// ---- the catalog ----

namespace {

// sign changes of f on a fine grid of (a, b), refined by bisection
std::vector<double> roots_of(const std::function<double(double)>& f, double a, double b) {
  std::vector<double> out;
  const int steps = 4000;
  double x0 = a, f0 = f(a);
  for (int i = 1; i <= steps; ++i) {
    const double x1 = a + (b - a) * i / steps, f1 = f(x1);
    if (f0 == 0.0) out.push_back(x0);
    else if (f0 * f1 < 0.0) {
      double lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double m = 0.5 * (lo + hi), fm = f(m);
        if ((fm < 0) == (flo < 0)) {
          lo = m;
          flo = fm;
        } else {
          hi = m;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

double jouk(double x) { return x + 1.0 / x; }

// x = sqrt(y) for the root y in (0,1) of f
double sym_root(const std::function<double(double)>& f) {
  const auto r = roots_of(f, 1e-12, 1.0 - 1e-12);
  if (r.size() != 1) throw std::logic_error("expected a single root in (0,1)");
  return std::sqrt(r.front());
}

std::vector<ExpectedPoint> sorted(std::vector<ExpectedPoint> p) {
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return p;
}

ExpectedPoint disc(double v) { return {v, 1, EigenClass::discrete}; }
ExpectedPoint hid(double v, int m) { return {v, m, EigenClass::hidden}; }
ExpectedPoint emb(double v) { return {v, 0, EigenClass::embedded}; }

InfiniteGraphSpec tailed(WeightedGraph g, int attach) { return make_tailed(std::move(g), {TailSpec{attach, 1.0, {}}}); }

WeightedGraph multiple_star(int n, int p) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k < p; ++k) e.push_back({(k - 1) * n + i, k * n + i, 1.0});
    e.push_back({(p - 1) * n + i, p * n + 1, 1.0});
  }
  return build_from_edges(p * n + 1, e);
}

WeightedGraph t_graph(int n) {
  std::vector<int> seq{1};
  for (int k = 2; k <= 2 * n; k += 2) seq.push_back(k);
  for (int k = 2 * n - 1; k >= 3; k -= 2) seq.push_back(k);
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) e.push_back({seq[i], seq[i + 1], 1.0});
  return build_from_edges(2 * n, e);
}

WeightedGraph flag_graph() {
  return build_from_edges(9, {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {2, 5, 1}, {3, 5, 1}, {3, 6, 1},
                              {4, 7, 1}, {5, 7, 1}, {5, 8, 1}, {6, 8, 1}, {7, 9, 1}, {8, 9, 1}});
}

Fixture graph_fixture(std::string name, std::string desc, WeightedGraph g, int attach, std::vector<ExpectedPoint> pts) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(desc);
  const bool unit = g.unit_weights();
  f.spec = tailed(std::move(g), attach);
  f.points = sorted(std::move(pts));
  f.cross_method = true;
  f.oracle = true;
  // Schwenk against the dense determinant on unweighted graphs
  if (unit) {
    const auto& fin = std::get<TailedGraph>(f.spec).finite;
    f.extra = [fin](Checker& c) {
      c.residual("Schwenk vs determinant", max_coeff_diff(to_real(schwenk_characteristic(fin)), characteristic_polynomial(adjacency_matrix(fin))));
    };
  }
  return f;
}

Fixture family_fixture(std::string name, std::string desc, FamilySpec spec, std::vector<ExpectedPoint> pts,
                       std::vector<Interval> support) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(desc);
  f.spec = spec;
  f.points = sorted(std::move(pts));
  f.support = std::move(support);
  f.extra = [spec](Checker& c) {
    const FamilyModel m = family_model(spec);
    if (!m.basis) return;
    const InvariantBasis b = m.basis(12);
    const VerifyReport r = verify_invariant_decomposition(b);
    c.require(r.ok, "invariant decomposition: " + r.detail);
    c.residual("invariant decomposition", r.max_residual);
    c.require(!verify_invariant_decomposition(swap_first_claims(b)).ok, "swapped claims were accepted");
  };
  return f;
}

void chain_extra(Fixture& f, std::function<void(Checker&)> more) {
  auto prev = f.extra;
  f.extra = [prev, more](Checker& c) {
    if (prev) prev(c);
    more(c);
  };
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> cat;
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r17 = std::sqrt(17.0);

  // stars
  for (int n = 3; n <= 8; ++n) {
    const double s = std::sqrt(n - 1.0);
    cat.push_back(graph_fixture("star-" + std::to_string(n), "star S_" + std::to_string(n) + " with a tail at the root",
                                build_star(std::vector<double>(static_cast<std::size_t>(n), 1.0)), n + 1,
                                {disc(-(s + 1 / s)), disc(s + 1 / s), hid(0.0, n - 1)}));
  }
  {
    const double s = std::sqrt(1.5 * 1.5 - 1.0);
    cat.push_back(graph_fixture("weighted-star-1.5", "weighted star with |w| = 1.5", build_star({1.2, 0.9}), 3,
                                {disc(-(s + 1 / s)), disc(s + 1 / s), hid(0.0, 1)}));
    cat.push_back(graph_fixture("weighted-star-1.4", "weighted star with |w| = 1.4, below threshold",
                                build_star({0.84, 1.12}), 3, {hid(0.0, 1)}));
    Fixture t = graph_fixture("weighted-star-threshold", "star S_2, |w| = sqrt2: a resonance, no eigenvalue",
                              build_star({1.0, 1.0}), 3, {hid(0.0, 1)});
    t.notes = {"resonance"};
    cat.push_back(t);
  }

  // multiple stars
  for (auto [n, p] : {std::pair{3, 2}, std::pair{4, 3}}) {
    const double x0 = sym_root([n = n, p = p](double y) {
      double s = 0.0;
      for (int k = 1; k <= p; ++k) s += std::pow(y, k);
      return (n - 1) * s - 1.0;
    });
    std::vector<ExpectedPoint> pts{disc(-jouk(x0)), disc(jouk(x0))};
    for (int j = 1; j <= p; ++j) pts.push_back(hid(2.0 * std::cos(M_PI * j / (p + 1)), n - 1));
    cat.push_back(graph_fixture("multiple-star-" + std::to_string(n) + "-" + std::to_string(p),
                                "star with " + std::to_string(n) + " rays of length " + std::to_string(p), multiple_star(n, p),
                                p * n + 1, pts));
  }

  // trees
  {
    const double x1 = sym_root([](double y) { return 1 - y * y - 2 * y * y * y - 2 * std::pow(y, 4) - std::pow(y, 5); });
    cat.push_back(graph_fixture("t-graph-3-2", "path with rays of lengths 3 and 2 at the root", t_graph(3), 6,
                                {disc(-jouk(x1)), disc(jouk(x1))}));
    const double x2 = sym_root([](double y) { return -2 * y * y * y - 2 * y * y - y + 1; });
    cat.push_back(graph_fixture("t-graph-1-1-2", "tree T(1,1,2) with a tail",
                                build_from_edges(5, {{1, 2, 1}, {2, 5, 1}, {3, 5, 1}, {4, 5, 1}}), 5,
                                {disc(-jouk(x2)), disc(jouk(x2)), hid(0.0, 1)}));
    const double x3 = sym_root([](double y) { return std::pow(y, 4) + 2 * y * y * y - y * y + 3 * y - 1; });
    cat.push_back(graph_fixture("tree-8", "tree of order 8 with a tail",
                                build_from_edges(8, {{1, 6, 1}, {2, 6, 1}, {3, 6, 1}, {6, 8, 1}, {8, 7, 1}, {7, 4, 1}, {7, 5, 1}}),
                                8, {disc(-jouk(x3)), disc(jouk(x3)), hid(0.0, 3)}));
    const double x7 = sym_root([](double y) { return -std::pow(y, 4) - 6 * y + 1; });
    cat.push_back(graph_fixture("flag", "flag graph with a tail", flag_graph(), 9, {disc(-jouk(x7)), disc(jouk(x7)), hid(-r2, 1), hid(0.0, 2), hid(r2, 1)}));
  }

  // complete graphs
  for (int n = 3; n <= 8; ++n) {
    const double x6 = 0.5 * (std::sqrt((n + 2.0) / (n - 2.0)) - 1.0);
    cat.push_back(graph_fixture("complete-" + std::to_string(n), "complete graph K_" + std::to_string(n) + " with a tail",
                                build_complete(n), n, {disc(jouk(x6)), hid(-1.0, n - 2)}));
  }

  // flowers of triangles, plus one mixed flower
  for (int n = 2; n <= 5; ++n) {
    const double d = std::sqrt(8.0 * n - 3.0), q = 2.0 * (2 * n - 1);
    const double x4 = (-1 + d) / q, x5 = (-1 - d) / q;
    Fixture f = graph_fixture("flower-c3-" + std::to_string(n), std::to_string(n) + " triangles glued at the root",
                              build_flower(std::vector<int>(static_cast<std::size_t>(n), 3)), 2 * n + 1,
                              {disc(jouk(x5)), disc(jouk(x4)), hid(-1.0, n), hid(1.0, n - 1)});
    chain_extra(f, [n, x4, x5](Checker& c) {
      const auto [lm, lp] = flower_discrete_spectrum(std::vector<int>(static_cast<std::size_t>(n), 2));
      c.value("flower equation lambda+", lp, jouk(x4));
      c.value("flower equation lambda-", lm, jouk(x5));
    });
    cat.push_back(f);
  }
  {
    const auto [lm, lp] = flower_discrete_spectrum({3, 4});
    Fixture f = graph_fixture("flower-4-5", "cycles C_4 and C_5 glued at the root", build_flower({4, 5}), 8,
                              {disc(lm), disc(lp), hid(-(1 + r5) / 2, 1), hid(0.0, 1), hid((r5 - 1) / 2, 1)});
    cat.push_back(f);
  }

  // two tails on an odd cycle
  for (int n : {2, 3}) {
    const double x8 = roots_of([n](double x) { return -std::pow(x, 2 * n + 1) - x * x - x + 1; }, 0.0, 1.0).at(0);
    const double x9 = roots_of(
                          [n](double x) {
                            double s = 0.0;
                            for (int k = 0; k < n; ++k) s += std::pow(x, 2 * k);
                            return 1 + x * s;
                          },
                          -1.0, 0.0)
                          .at(0);
    Fixture f = family_fixture("cycle-two-tails-" + std::to_string(n),
                               "cycle C_" + std::to_string(2 * n + 1) + " with tails at two adjacent vertices",
                               FamilySpec{"cycle-two-tails", {{"n", {double(n)}}}}, {disc(jouk(x9)), disc(jouk(x8))}, {});
    f.oracle = true;
    cat.push_back(f);
  }

  // ladders
  {
    Fixture f = family_fixture("complete-ladder", "ladder with every rung", {"complete-ladder", {}}, {}, {make_interval(-3, 3)});
    chain_extra(f, [](Checker& c) {
      const Spectrum s = family_spectrum({"complete-ladder", {}});
      c.require(s.band_multiplicity(0.0) == 2 && s.band_multiplicity(0.99) == 2, "multiplicity 2 on [-1,1]");
      c.require(s.band_multiplicity(2.0) == 1 && s.band_multiplicity(-2.0) == 1, "multiplicity 1 off [-1,1]");
    });
    cat.push_back(f);
    cat.push_back(family_fixture("half-ladder", "complete ladder closed by one vertex", {"half-ladder", {}},
                                 {hid(1 - r5, 1)}, {make_interval(-3, 3)}));
  }
  {
    std::vector<ExpectedPoint> pts{hid(-1.0, 1)};
    for (double x : roots_of([](double x) { return std::pow(x, 5) - 2 * std::pow(x, 3) - 3 * x * x + x + 1; }, -1.0, 1.0)) {
      const double l = jouk(x) + 1.0;
      pts.push_back(std::abs(l) > 3.0 ? disc(l) : hid(l, 1));
    }
    for (double x : roots_of([](double x) { return -x * x * x - x + 1; }, -1.0, 1.0)) pts.push_back(hid(jouk(x) - 1.0, 1));
    Fixture f = family_fixture("lantern", "K4 lantern on a ladder", {"lantern", {}}, pts, {make_interval(-3, 3)});
    f.oracle = true;
    cat.push_back(f);
  }
  {
    const double e = (1 + r17) / 2;
    Fixture f = family_fixture("hexagon-ladder", "ladder with every second rung", {"hexagon-ladder", {}}, {}, {make_interval(-e, e)});
    chain_extra(f, [](Checker& c) {
      const PeriodicJacobi jp({1.0, 0.0}, {1.0, 1.0});
      bool edge = false, accepted = false;
      for (const auto& g : classify_gap_roots(jp)) {
        edge = edge || g.cls == GapRootClass::edge;
        accepted = accepted || g.cls == GapRootClass::eigenvalue;
      }
      c.require(edge && !accepted, "p_2 root at the gap edge must not give an eigenvalue");
    });
    cat.push_back(f);
    const double g = (1 + r5) / 2;
    Fixture o = family_fixture("octagon-ladder", "ladder with every third rung", {"octagon-ladder", {}},
                               {hid(-g, 1), hid(g, 1)}, {make_interval(-1 - r2, 1 + r2)});
    chain_extra(o, [g](Checker& c) {
      const PeriodicJacobi jp({1.0, 0.0, 0.0}, {1.0, 1.0, 1.0});
      bool acc = false, rej = false;
      for (const auto& r : classify_gap_roots(jp)) {
        if (std::abs(r.lambda - g) < 1e-9) acc = r.cls == GapRootClass::eigenvalue;
        if (std::abs(r.lambda - (1 - g)) < 1e-9) rej = r.cls == GapRootClass::rejected;
      }
      c.require(acc && rej, "sign rule: (1+sqrt5)/2 accepted, (1-sqrt5)/2 rejected");
    });
    cat.push_back(o);
  }

  // chains
  cat.push_back(family_fixture("squares", "chain of squares", {"squares", {}}, {emb(0.0)}, {make_interval(-2 * r2, 2 * r2)}));
  cat.push_back(family_fixture("squares-diagonal", "chain of squares with diagonals", {"squares-diagonal", {}}, {emb(-1.0)},
                               {make_interval((1 - std::sqrt(33.0)) / 2, 0), make_interval(1, (1 + std::sqrt(33.0)) / 2)}));
  {
    const double r7 = std::sqrt(7.0);
    cat.push_back(family_fixture("cubes", "chain of cubes", {"cubes", {}}, {emb(-1.0), emb(1.0)},
                                 {make_interval(-1 - r7, -2), make_interval(1 - r7, r7 - 1), make_interval(2, 1 + r7)}));
  }
  {
    Fixture f = family_fixture("hexagon-chain", "chain of hexagons", {"hexagon-chain", {}},
                               {disc(-r2), emb(-1.0), emb(1.0), disc(r2)},
                               {make_interval((-1 - r17) / 2, (1 - r17) / 2), make_interval(-1, 1),
                                make_interval((r17 - 1) / 2, (1 + r17) / 2)});
    f.oracle = true;
    cat.push_back(f);
    const double r6 = std::sqrt(6.0);
    Fixture o = family_fixture("octagon-chain", "chain of octagons", {"octagon-chain", {}},
                               {disc(-r3), emb(-r2), emb(0.0), emb(r2), disc(r3)},
                               {make_interval(-r6, -2), make_interval(-r2, r2), make_interval(2, r6)});
    o.notes = {"closed gap"};
    o.oracle = true;
    cat.push_back(o);
  }

  // sparse families
  {
    Fixture f = family_fixture("sparse-ladder", "ladder with rungs at 1, 2, 4, 8, ...",
                               {"sparse-ladder", {{"rungs", {1, 2, 4, 8, 16, 32, 64, 128}}}}, {disc(-r5), disc(r5)}, {});
    f.notes = {"isolated points of the essential spectrum"};
    chain_extra(f, [](Checker& c) {
      const auto s = simon_stolz_partial_sums(OperatorSpec{SparseLadderSpec{1, {1, 2, 4, 8, 16, 32, 64, 128}}}, 0.5, 256);
      c.require(std::is_sorted(s.begin(), s.end()), "Simon-Stolz partial sums must be monotone");
    });
    cat.push_back(f);
    Fixture g = family_fixture("sparse-cycle-chain", "chain of cycles C_4, C_8, C_16, ...",
                               {"sparse-cycle-chain", {{"sizes", {2, 4, 8, 16, 32}}}}, {disc(-4 / r3), disc(4 / r3)}, {});
    chain_extra(g, [](Checker& c) {
      const auto p = sparse_cycle_chain_right_limits(true).back();
      for (double re : {-0.7, -0.2, 0.3, 0.6})
        for (double im : {0.0, 0.25}) {
          const std::complex<double> z(re, im);
          c.residual("rank-two factorization", std::abs(two_sided_perturbation_determinant(p, z) - cycle_chain_kappa_determinant(z)));
        }
    });
    cat.push_back(g);
  }

  // Toeplitz and comb
  cat.push_back(family_fixture("toeplitz-1-1", "Toeplitz graph with alpha = (1,1)", {"toeplitz", {{"alpha", {1, 1}}}}, {},
                               {make_interval(-2.25, 4.0)}));
  cat.push_back(family_fixture("comb", "comb graph", {"comb", {}}, {},
                               {make_interval(-r2 - 1, -r2 + 1), make_interval(r2 - 1, r2 + 1)}));
  return cat;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> cat = build_catalog();
  return cat;
}

std::vector<const Fixture*> filter_catalog(const std::string& substring) {
  std::vector<const Fixture*> out;
  for (const auto& f : fixture_catalog())
    if (substring.empty() || f.name.find(substring) != std::string::npos) out.push_back(&f);
  return out;
}

}  // namespace gspec
