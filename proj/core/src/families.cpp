#include "gspec/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gspec {

namespace {

const double kR2 = std::sqrt(2.0);
const double kInvR2 = 1.0 / std::sqrt(2.0);

using Basis = std::function<SparseVector(int)>;

SparseVector plus(int u, int v) { return {{u, kInvR2}, {v, kInvR2}}; }
SparseVector minus(int u, int v) { return {{u, kInvR2}, {v, -kInvR2}}; }

bool inside(const SparseVector& v, int limit) {
  return std::all_of(v.begin(), v.end(), [limit](const auto& e) { return e.first <= limit; });
}

// largest k with basis(1..k) in the interior and basis(k + bw) in the window
int fitting_count(const Basis& f, int interior, int order, int bw) {
  int k = 0;
  while (inside(f(k + 1), interior) && inside(f(k + 1 + bw), order)) ++k;
  return k;
}

ComponentClaim fit(ComponentClaim c, const InvariantBasis& b) {
  c.count = fitting_count(c.basis, b.interior, b.window.order(), c.bandwidth);
  return c;
}

int param_int(const FamilySpec& s, const std::string& key, int fallback) {
  auto it = s.params.find(key);
  if (it == s.params.end() || it->second.empty()) return fallback;
  const double v = it->second.front();
  if (v != std::floor(v)) throw std::invalid_argument("family parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

std::vector<int> param_ints(const FamilySpec& s, const std::string& key) {
  std::vector<int> out;
  auto it = s.params.find(key);
  if (it == s.params.end()) return out;
  for (double v : it->second) {
    if (v != std::floor(v)) throw std::invalid_argument("family parameter '" + key + "' must hold integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

JacobiComponent component(std::variant<FiniteRankJacobi, PeriodicJacobi> op, double shift, std::string label) {
  JacobiComponent c;
  c.op = std::move(op);
  c.shift = shift;
  c.label = std::move(label);
  return c;
}

void finish(FamilyModel& m) {
  if (m.has_form && !m.spectrum) {
    const CanonicalForm f = m.form;
    m.spectrum = [f] { return spectrum_of_canonical(f); };
  }
}

// ---- ladders: top vertex 2n-1, bottom 2n ----

FamilyModel ladder_family(const std::string& id, const std::string& desc, std::function<bool(int)> rung,
                          int period) {
  FamilyModel m;
  m.id = id;
  m.description = desc;
  m.has_form = true;
  std::vector<double> bp(static_cast<std::size_t>(period), 0.0), bm(static_cast<std::size_t>(period), 0.0);
  for (int n = 1; n <= period; ++n)
    if (rung(n)) {
      bp[n - 1] = 1.0;
      bm[n - 1] = -1.0;
    }
  const std::vector<double> a(static_cast<std::size_t>(period), 1.0);
  m.form.jacobi_components.push_back(component(PeriodicJacobi(bp, a), 0.0, "J+"));
  m.form.jacobi_components.push_back(component(PeriodicJacobi(bm, a), 0.0, "J-"));
  m.window = [rung](int cells) { return ladder_window(cells, rung); };
  const CanonicalForm form = m.form;
  m.basis = [rung, form](int cells) {
    InvariantBasis b;
    b.window = ladder_window(cells, rung);
    b.interior = 2 * cells - 2;
    b.components.push_back(fit(claim_jacobi(form.jacobi_components[0], [](int k) { return plus(2 * k - 1, 2 * k); }, 0), b));
    b.components.push_back(fit(claim_jacobi(form.jacobi_components[1], [](int k) { return minus(2 * k - 1, 2 * k); }, 0), b));
    return b;
  };
  m.oracle = [bp, a] { return OperatorSpec{PeriodicJacobi(bp, a)}; };
  return m;
}

FamilyModel complete_ladder() {
  FamilyModel m = ladder_family("complete-ladder", "ladder with every rung", [](int) { return true; }, 1);
  // +-I + J_0
  m.form.jacobi_components[0] = component(FiniteRankJacobi{}, 1.0, "J+");
  m.form.jacobi_components[1] = component(FiniteRankJacobi{}, -1.0, "J-");
  const CanonicalForm form = m.form;
  m.basis = [form](int cells) {
    InvariantBasis b;
    b.window = ladder_window(cells, [](int) { return true; });
    b.interior = 2 * cells - 2;
    b.components.push_back(fit(claim_jacobi(form.jacobi_components[0], [](int k) { return plus(2 * k - 1, 2 * k); }, 0), b));
    b.components.push_back(fit(claim_jacobi(form.jacobi_components[1], [](int k) { return minus(2 * k - 1, 2 * k); }, 0), b));
    return b;
  };
  m.oracle = [] { return OperatorSpec{FiniteRankJacobi{}}; };
  return m;
}

// vertex 1 joined to 2 and 3, then a complete ladder on (2n, 2n+1)
WeightedGraph half_ladder_window(int cells) {
  std::vector<Edge> e{{1, 2, 1.0}, {1, 3, 1.0}};
  for (int n = 1; n <= cells; ++n) {
    e.push_back({2 * n, 2 * n + 1, 1.0});
    if (n < cells) {
      e.push_back({2 * n, 2 * n + 2, 1.0});
      e.push_back({2 * n + 1, 2 * n + 3, 1.0});
    }
  }
  return build_from_edges(2 * cells + 1, e);
}

FamilyModel half_ladder() {
  FamilyModel m;
  m.id = "half-ladder";
  m.description = "complete ladder with one end closed by a single vertex";
  m.has_form = true;
  m.form.jacobi_components.push_back(component(FiniteRankJacobi({-1.0}, {kR2}), 1.0, "J+"));
  m.form.jacobi_components.push_back(component(FiniteRankJacobi{}, -1.0, "J-"));
  m.window = half_ladder_window;
  const CanonicalForm form = m.form;
  m.basis = [form](int cells) {
    InvariantBasis b;
    b.window = half_ladder_window(cells);
    b.interior = 2 * cells - 1;
    b.components.push_back(fit(claim_jacobi(form.jacobi_components[0],
                                            [](int k) { return k == 1 ? SparseVector{{1, 1.0}} : plus(2 * k - 2, 2 * k - 1); }, 0),
                               b));
    b.components.push_back(fit(claim_jacobi(form.jacobi_components[1], [](int k) { return minus(2 * k, 2 * k + 1); }, 0), b));
    return b;
  };
  return m;
}

// K4 on 1..4, ladder vertex e_k has id 4 + k, links 3-e_1 and 4-e_2, rungs from the second on
WeightedGraph lantern_window(int cells) {
  std::vector<Edge> e;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) e.push_back({i, j, 1.0});
  e.push_back({3, 5, 1.0});
  e.push_back({4, 6, 1.0});
  for (int n = 1; n <= cells; ++n) {
    const int top = 4 + 2 * n - 1, bot = 4 + 2 * n;
    if (n >= 2) e.push_back({top, bot, 1.0});
    if (n < cells) {
      e.push_back({top, top + 2, 1.0});
      e.push_back({bot, bot + 2, 1.0});
    }
  }
  return build_from_edges(4 + 2 * cells, e);
}

FamilyModel lantern() {
  FamilyModel m;
  m.id = "lantern";
  m.description = "complete graph K4 capping a ladder whose first rung is missing";
  m.has_form = true;
  m.form.finite_component = Eigen::MatrixXd::Constant(1, 1, -1.0);
  m.form.jacobi_components.push_back(component(FiniteRankJacobi({0.0, 0.0, -1.0}, {2.0, 1.0, 1.0}), 1.0, "J+"));
  m.form.jacobi_components.push_back(component(FiniteRankJacobi({0.0, 1.0}, {1.0, 1.0}), -1.0, "J-"));
  m.window = lantern_window;
  const CanonicalForm form = m.form;
  m.basis = [form](int cells) {
    InvariantBasis b;
    b.window = lantern_window(cells);
    b.interior = 4 + 2 * cells - 2;
    b.components.push_back(claim_finite("F", form.finite_component, [](int) { return minus(1, 2); }));
    auto ladder = [](int k) { return 4 + 2 * k - 1; };  // top vertex of rung k
    b.components.push_back(fit(claim_jacobi(form.jacobi_components[0],
                                            [ladder](int k) {
                                              if (k == 1) return plus(1, 2);
                                              if (k == 2) return plus(3, 4);
                                              return plus(ladder(k - 2), ladder(k - 2) + 1);
                                            },
                                            0),
                               b));
    b.components.push_back(fit(claim_jacobi(form.jacobi_components[1],
                                            [ladder](int k) {
                                              if (k == 1) return minus(3, 4);
                                              return minus(ladder(k - 1), ladder(k - 1) + 1);
                                            },
                                            0),
                               b));
    return b;
  };
  return m;
}

// ---- chains of even cycles C_{2N}: hub h_c = c(2N-1)+1, pair j = (h_c+2j-1, h_c+2j) ----

WeightedGraph cycle_chain_window(int big_n, int cells, bool diagonal) {
  const int cell = 2 * big_n - 1;
  std::vector<Edge> e;
  for (int c = 0; c < cells; ++c) {
    const int h = c * cell + 1;
    e.push_back({h, h + 1, 1.0});
    e.push_back({h, h + 2, 1.0});
    for (int j = 1; j < big_n - 1; ++j) {
      e.push_back({h + 2 * j - 1, h + 2 * j + 1, 1.0});
      e.push_back({h + 2 * j, h + 2 * j + 2, 1.0});
    }
    if (diagonal)
      for (int j = 1; j < big_n; ++j) e.push_back({h + 2 * j - 1, h + 2 * j, 1.0});
    e.push_back({h + 2 * big_n - 3, h + cell, 1.0});
    e.push_back({h + 2 * big_n - 2, h + cell, 1.0});
  }
  return build_from_edges(cells * cell + 1, e);
}

FamilyModel cycle_chain(const std::string& id, int big_n, bool diagonal) {
  if (big_n < 2) throw std::invalid_argument("cycle chain needs N >= 2");
  if (diagonal && big_n != 2) throw std::invalid_argument("diagonal variant only for squares");
  FamilyModel m;
  m.id = id;
  m.description = "chain of cycles C_" + std::to_string(2 * big_n) + " glued at opposite vertices" +
                  (diagonal ? ", each with its diagonal" : "");
  m.has_form = true;
  std::vector<double> b(static_cast<std::size_t>(big_n), diagonal ? 1.0 : 0.0), a(static_cast<std::size_t>(big_n), 1.0);
  b[0] = 0.0;
  a.front() = kR2;
  a.back() = kR2;
  m.form.jacobi_components.push_back(component(PeriodicJacobi(b, a), 0.0, "J+"));
  Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(big_n - 1, big_n - 1);
  for (int i = 0; i + 1 < big_n - 1; ++i) blk(i, i + 1) = blk(i + 1, i) = 1.0;
  if (diagonal) blk -= Eigen::MatrixXd::Identity(big_n - 1, big_n - 1);
  m.form.repeated_blocks.push_back({blk, "H-"});
  m.window = [big_n, diagonal](int cells) { return cycle_chain_window(big_n, cells, diagonal); };
  const CanonicalForm form = m.form;
  const int cell = 2 * big_n - 1;
  m.basis = [form, big_n, diagonal, cell](int cells) {
    InvariantBasis ib;
    ib.window = cycle_chain_window(big_n, cells, diagonal);
    ib.interior = cells * cell;
    ib.components.push_back(fit(claim_jacobi(form.jacobi_components[0],
                                             [big_n, cell](int k) {
                                               const int c = (k - 1) / big_n, j = (k - 1) % big_n, h = c * cell + 1;
                                               return j == 0 ? SparseVector{{h, 1.0}} : plus(h + 2 * j - 1, h + 2 * j);
                                             },
                                             0),
                                ib));
    ib.components.push_back(fit(claim_repeated(form.repeated_blocks[0],
                                               [big_n, cell](int k) {
                                                 const int c = (k - 1) / (big_n - 1), j = (k - 1) % (big_n - 1) + 1;
                                                 const int h = c * cell + 1;
                                                 return minus(h + 2 * j - 1, h + 2 * j);
                                               },
                                               0),
                                ib));
    return ib;
  };
  const PeriodicJacobi pj(b, a);
  m.oracle = [pj] { return OperatorSpec{pj}; };
  return m;
}

// ---- cubes: hub 7c+1, layer one 7c+2..7c+4, layer two 7c+5..7c+7 ----

WeightedGraph cubes_window(int cells) {
  std::vector<Edge> e;
  for (int c = 0; c < cells; ++c) {
    const int h = 7 * c + 1;
    for (int i = 1; i <= 3; ++i) e.push_back({h, h + i, 1.0});
    const int l1[3] = {h + 1, h + 2, h + 3};
    const int l2[3] = {h + 4, h + 5, h + 6};
    e.push_back({l1[0], l2[0], 1.0});
    e.push_back({l1[0], l2[1], 1.0});
    e.push_back({l1[1], l2[1], 1.0});
    e.push_back({l1[1], l2[2], 1.0});
    e.push_back({l1[2], l2[0], 1.0});
    e.push_back({l1[2], l2[2], 1.0});
    for (int x : l2) e.push_back({x, h + 7, 1.0});
  }
  return build_from_edges(7 * cells + 1, e);
}

FamilyModel cubes() {
  FamilyModel m;
  m.id = "cubes";
  m.description = "chain of cubes glued at antipodal vertices";
  m.has_form = true;
  const double r3 = std::sqrt(3.0);
  m.form.jacobi_components.push_back(component(PeriodicJacobi({0.0, 0.0, 0.0}, {r3, 2.0, r3}), 0.0, "J+"));
  Eigen::MatrixXd blk(2, 2);
  blk << 0.0, 1.0, 1.0, 0.0;
  m.form.repeated_blocks.push_back({blk, "H(1)"});
  m.form.repeated_blocks.push_back({blk, "H(2)"});
  m.window = cubes_window;
  const CanonicalForm form = m.form;
  m.basis = [form, r3](int cells) {
    InvariantBasis ib;
    ib.window = cubes_window(cells);
    ib.interior = 7 * cells;
    ib.components.push_back(fit(claim_jacobi(form.jacobi_components[0],
                                             [r3](int k) {
                                               const int h = 7 * ((k - 1) / 3) + 1, j = (k - 1) % 3;
                                               if (j == 0) return SparseVector{{h, 1.0}};
                                               const int o = j == 1 ? h + 1 : h + 4;
                                               return SparseVector{{o, 1 / r3}, {o + 1, 1 / r3}, {o + 2, 1 / r3}};
                                             },
                                             0),
                                ib));
    const double r6 = std::sqrt(6.0);
    ib.components.push_back(fit(claim_repeated(form.repeated_blocks[0],
                                               [r6](int k) {
                                                 const int h = 7 * ((k - 1) / 2) + 1;
                                                 if ((k - 1) % 2 == 0)
                                                   return SparseVector{{h + 1, 1 / r6}, {h + 2, 1 / r6}, {h + 3, -2 / r6}};
                                                 return SparseVector{{h + 4, -1 / r6}, {h + 5, 2 / r6}, {h + 6, -1 / r6}};
                                               },
                                               0),
                                ib));
    ib.components.push_back(fit(claim_repeated(form.repeated_blocks[1],
                                               [](int k) {
                                                 const int h = 7 * ((k - 1) / 2) + 1;
                                                 return (k - 1) % 2 == 0 ? minus(h + 1, h + 2) : minus(h + 4, h + 6);
                                               },
                                               0),
                                ib));
    return ib;
  };
  const PeriodicJacobi pj({0.0, 0.0, 0.0}, {r3, 2.0, r3});
  m.oracle = [pj] { return OperatorSpec{pj}; };
  return m;
}

// ---- cycle C_{2n+1} with tails at 2n and 2n+1 ----

FamilyModel cycle_two_tails_family(int n) {
  if (n < 1) throw std::invalid_argument("cycle with two tails needs n >= 1");
  FamilyModel m;
  m.id = "cycle-two-tails";
  m.description = "odd cycle C_" + std::to_string(2 * n + 1) + " with tails at two adjacent vertices";
  m.has_form = true;
  std::vector<double> bp(static_cast<std::size_t>(n) + 1, 0.0), ap(static_cast<std::size_t>(n) + 1, 1.0);
  bp.back() = 1.0;
  ap.front() = kR2;
  std::vector<double> bm(static_cast<std::size_t>(n), 0.0);
  bm.back() = -1.0;
  m.form.jacobi_components.push_back(component(FiniteRankJacobi(bp, ap), 0.0, "J+"));
  m.form.jacobi_components.push_back(component(FiniteRankJacobi(bm, {}), 0.0, "J-"));
  const TailedGraph tg = cycle_two_tails(n);
  m.window = [tg, n](int cells) { return truncate_tailed(tg, 2 * n + 1 + 2 * cells); };
  const CanonicalForm form = m.form;
  m.basis = [tg, form, n](int cells) {
    InvariantBasis ib;
    const int order = 2 * n + 1 + 2 * cells;
    ib.window = truncate_tailed(tg, order);
    ib.interior = order - 2;
    ib.components.push_back(fit(claim_jacobi(form.jacobi_components[0],
                                             [n](int k) {
                                               if (k == 1) return SparseVector{{n, 1.0}};
                                               if (k <= n) return plus(n + k - 1, n - k + 1);
                                               const int i = k - n - 1;
                                               return plus(2 * n + 2 * i, 2 * n + 2 * i + 1);
                                             },
                                             0),
                                ib));
    ib.components.push_back(fit(claim_jacobi(form.jacobi_components[1],
                                             [n](int k) {
                                               if (k < n) return minus(n + k, n - k);
                                               const int i = k - n;
                                               return minus(2 * n + 2 * i, 2 * n + 2 * i + 1);
                                             },
                                             0),
                                ib));
    return ib;
  };
  m.oracle = [tg] { return OperatorSpec{tg}; };
  return m;
}

FamilyModel spectrum_only(const std::string& id, const std::string& desc, std::function<Spectrum()> s) {
  FamilyModel m;
  m.id = id;
  m.description = desc;
  m.spectrum = std::move(s);
  return m;
}

}  // namespace

WeightedGraph ladder_window(int cells, const std::function<bool(int)>& rung) {
  if (cells < 1) throw std::invalid_argument("window needs at least one cell");
  std::vector<Edge> e;
  for (int n = 1; n <= cells; ++n) {
    if (rung(n)) e.push_back({2 * n - 1, 2 * n, 1.0});
    if (n < cells) {
      e.push_back({2 * n - 1, 2 * n + 1, 1.0});
      e.push_back({2 * n, 2 * n + 2, 1.0});
    }
  }
  return build_from_edges(2 * cells, e);
}

WeightedGraph comb_window(int spine) {
  std::vector<Edge> e;
  for (int k = 1; k <= spine; ++k) {
    e.push_back({2 * k - 1, 2 * k, 1.0});
    if (k < spine) e.push_back({2 * k - 1, 2 * k + 1, 1.0});
  }
  return build_from_edges(2 * spine, e);
}

TailedGraph cycle_two_tails(int n) {
  return make_tailed(build_cycle(2 * n + 1), {TailSpec{2 * n, 1.0, {}}, TailSpec{2 * n + 1, 1.0, {}}});
}

std::vector<std::string> family_ids() {
  return {"complete-ladder", "half-ladder",  "lantern",      "hexagon-ladder", "octagon-ladder",
          "simon-ladder",    "squares",      "squares-diagonal", "cubes",      "cycle-chain",
          "hexagon-chain",   "octagon-chain", "cycle-two-tails", "comb",       "toeplitz",
          "sparse-ladder",   "sparse-cycle-chain"};
}

FamilyModel family_model(const FamilySpec& spec) {
  FamilyModel m;
  const std::string& id = spec.id;
  auto periodic_ladder = [](const std::string& name, int p) {
    if (p < 1) throw std::invalid_argument("ladder period must be >= 1");
    return ladder_family(name, "ladder with a rung every " + std::to_string(p) + " steps",
                         [p](int n) { return (n - 1) % p == 0; }, p);
  };
  if (id == "complete-ladder") {
    m = complete_ladder();
  } else if (id == "half-ladder") {
    m = half_ladder();
  } else if (id == "lantern") {
    m = lantern();
  } else if (id == "hexagon-ladder") {
    m = periodic_ladder(id, 2);
  } else if (id == "octagon-ladder") {
    m = periodic_ladder(id, 3);
  } else if (id == "simon-ladder") {
    m = periodic_ladder(id, param_int(spec, "period", 2));
  } else if (id == "squares") {
    m = cycle_chain(id, 2, false);
  } else if (id == "squares-diagonal") {
    m = cycle_chain(id, 2, true);
  } else if (id == "cubes") {
    m = cubes();
  } else if (id == "cycle-chain") {
    m = cycle_chain(id, param_int(spec, "N", 3), false);
  } else if (id == "hexagon-chain") {
    m = cycle_chain(id, 3, false);
  } else if (id == "octagon-chain") {
    m = cycle_chain(id, 4, false);
  } else if (id == "cycle-two-tails") {
    m = cycle_two_tails_family(param_int(spec, "n", 2));
  } else if (id == "comb") {
    m = spectrum_only(id, "path with a pendant vertex at every vertex", comb_spectrum);
    m.window = comb_window;
  } else if (id == "toeplitz") {
    ToeplitzSpec t{param_ints(spec, "alpha")};
    if (t.alpha.empty()) throw std::invalid_argument("toeplitz family needs 'alpha'");
    m = spectrum_only(id, "banded Toeplitz adjacency", [t] { return banded_toeplitz_spectrum(t); });
    m.oracle = [t] { return OperatorSpec{t}; };
  } else if (id == "sparse-ladder") {
    const std::vector<int> r = param_ints(spec, "rungs");
    m = spectrum_only(id, "ladder with sparse rungs", [r] { return sparse_ladder_essential_spectrum(r); });
    m.oracle = [r] { return OperatorSpec{SparseLadderSpec{1, r}}; };
  } else if (id == "sparse-cycle-chain") {
    const std::vector<int> s = param_ints(spec, "sizes");
    m = spectrum_only(id, "chain of cycles of growing size", [s] { return sparse_cycle_chain_essential_spectrum(s); });
    m.oracle = [s] { return OperatorSpec{SparseCycleChainSpec{s}}; };
  } else {
    throw std::invalid_argument("unknown family '" + id + "'");
  }
  finish(m);
  return m;
}

Spectrum family_spectrum(const FamilySpec& spec) { return family_model(spec).spectrum(); }

InvariantBasis swap_first_claims(InvariantBasis b) {
  if (b.components.size() < 2) throw std::invalid_argument("need two components to swap");
  std::swap(b.components[0].entry, b.components[1].entry);
  return b;
}

}  // namespace gspec
