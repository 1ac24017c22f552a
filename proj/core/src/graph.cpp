#include "gspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace gspec {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 1 || e.j > n) throw std::invalid_argument("edge vertex id outside 1..n");
    if (e.i == e.j) throw std::invalid_argument("loops are not allowed");
    if (!(e.w > 0) || !std::isfinite(e.w)) throw std::invalid_argument("edge weights must be positive");
    if (!seen.insert({e.i, e.j}).second) throw std::invalid_argument("duplicate edge");
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  edges_ = std::move(edges);
}

double WeightedGraph::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.i == u && e.j == v) return e.w;
  return 0.0;
}

std::vector<int> WeightedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.i == v) out.push_back(e.j);
    else if (e.j == v) out.push_back(e.i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool WeightedGraph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

bool WeightedGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<std::vector<int>> adj(n_ + 1);
  for (const auto& e : edges_) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<char> seen(n_ + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n_;
}

WeightedGraph build_path(int k) {
  if (k < 1) throw std::invalid_argument("path requires k >= 1");
  std::vector<Edge> e;
  for (int v = 1; v < k; ++v) e.push_back({v, v + 1, 1.0});
  return WeightedGraph(k, std::move(e));
}

WeightedGraph build_cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle requires k >= 3");
  std::vector<Edge> e;
  for (int v = 1; v < k; ++v) e.push_back({v, v + 1, 1.0});
  e.push_back({1, k, 1.0});
  return WeightedGraph(k, std::move(e));
}

WeightedGraph build_star(const std::vector<double>& weights) {
  if (weights.empty()) throw std::invalid_argument("star requires at least one leaf weight");
  const int n = static_cast<int>(weights.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    if (!(weights[i] > 0)) throw std::invalid_argument("star weights must be positive");
    e.push_back({i + 1, n + 1, weights[i]});
  }
  return WeightedGraph(n + 1, std::move(e));
}

WeightedGraph build_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j, 1.0});
  return WeightedGraph(n, std::move(e));
}

WeightedGraph build_flower(const std::vector<int>& petal_orders) {
  if (petal_orders.empty()) throw std::invalid_argument("flower requires at least one petal");
  int total = 1;
  for (int m : petal_orders) {
    if (m < 3) throw std::invalid_argument("flower petal orders must be >= 3");
    total += m - 1;
  }
  std::vector<Edge> e;
  int next = 1;
  for (int m : petal_orders) {
    const int first = next, last = next + m - 2;
    for (int v = first; v < last; ++v) e.push_back({v, v + 1, 1.0});
    e.push_back({first, total, 1.0});
    e.push_back({last, total, 1.0});
    next = last + 1;
  }
  return WeightedGraph(total, std::move(e));
}

WeightedGraph build_from_edges(int n, const std::vector<Edge>& edges) { return WeightedGraph(n, edges); }

WeightedGraph couple(const WeightedGraph& g1, int v1, const WeightedGraph& g2, int v2, double d) {
  if (!g1.has_vertex(v1)) throw std::invalid_argument("couple: v1 is not a vertex of g1");
  if (!g2.has_vertex(v2)) throw std::invalid_argument("couple: v2 is not a vertex of g2");
  if (!(d > 0)) throw std::invalid_argument("couple: bridge weight must be positive");
  const int n1 = g1.order();
  std::vector<Edge> e = g1.edges();
  for (const auto& x : g2.edges()) e.push_back({x.i + n1, x.j + n1, x.w});
  e.push_back({v1, v2 + n1, d});
  return WeightedGraph(n1 + g2.order(), std::move(e));
}

VertexDeletion delete_vertices(const WeightedGraph& g, const std::vector<int>& vs) {
  std::vector<char> gone(g.order() + 1, 0);
  for (int v : vs) {
    if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertices: unknown vertex " + std::to_string(v));
    gone[v] = 1;
  }
  VertexDeletion out;
  out.old_to_new.assign(g.order() + 1, 0);
  out.new_to_old.assign(1, 0);
  int next = 0;
  for (int v = 1; v <= g.order(); ++v)
    if (!gone[v]) {
      out.old_to_new[v] = ++next;
      out.new_to_old.push_back(v);
    }
  std::vector<Edge> e;
  for (const auto& x : g.edges())
    if (!gone[x.i] && !gone[x.j]) e.push_back({out.old_to_new[x.i], out.old_to_new[x.j], x.w});
  out.graph = WeightedGraph(next, std::move(e));
  return out;
}

Eigen::MatrixXd adjacency_matrix(const WeightedGraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const auto& e : g.edges()) {
    a(e.i - 1, e.j - 1) = e.w;
    a(e.j - 1, e.i - 1) = e.w;
  }
  return a;
}

std::vector<std::vector<int>> simple_cycles_through(const WeightedGraph& g, int v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("simple_cycles_through: unknown vertex");
  std::vector<std::vector<int>> adj(g.order() + 1);
  for (const auto& e : g.edges()) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<std::vector<int>> out;
  std::vector<char> on_path(g.order() + 1, 0);
  std::vector<int> path{v};
  on_path[v] = 1;
  // each cycle is walked in both directions; keep the one whose second vertex
  // is smaller than its last
  std::function<void(int)> dfs = [&](int u) {
    for (int w : adj[u]) {
      if (w == v && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
        if (out.size() > kCycleCap) throw std::runtime_error("cycle enumeration cap exceeded");
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(v);
  return out;
}

void validate_tail(const WeightedGraph& g, const TailSpec& t) {
  if (!g.has_vertex(t.attach)) throw std::invalid_argument("tail attach vertex is not in the graph");
  if (!(t.bridge > 0)) throw std::invalid_argument("tail bridge weight must be positive");
  for (double w : t.tail_weights)
    if (!(w > 0)) throw std::invalid_argument("tail weights must be positive");
}

TailedGraph make_tailed(WeightedGraph g, std::vector<TailSpec> tails) {
  if (tails.empty()) throw std::invalid_argument("a tailed graph needs at least one tail");
  for (const auto& t : tails) validate_tail(g, t);
  return {std::move(g), std::move(tails)};
}

WeightedGraph truncate_tailed(const TailedGraph& tg, int n) {
  const int nf = tg.finite.order();
  const int nt = static_cast<int>(tg.tails.size());
  if (n < 1) throw std::invalid_argument("truncation order must be >= 1");
  std::vector<Edge> e;
  for (const auto& x : tg.finite.edges())
    if (x.j <= n) e.push_back(x);
  // tail t, position k >= 1 gets id nf + (k-1)*nt + t + 1
  for (int t = 0; t < nt; ++t) {
    const auto& spec = tg.tails[t];
    for (int k = 1;; ++k) {
      const int id = nf + (k - 1) * nt + t + 1;
      if (id > n) break;
      if (k == 1) {
        if (spec.attach <= n) e.push_back({spec.attach, id, spec.bridge});
      } else {
        const double w = (k - 2) < static_cast<int>(spec.tail_weights.size()) ? spec.tail_weights[k - 2] : 1.0;
        e.push_back({id - nt, id, w});
      }
    }
  }
  return WeightedGraph(n, std::move(e));
}

}  // namespace gspec
