#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace gspec {

struct Edge {
  int i = 0;  // 1-based, i < j after normalization
  int j = 0;
  double w = 1.0;
};

// Finite simple undirected graph with positive weights; vertex ids 1..n.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(int v) const { return v >= 1 && v <= n_; }
  double weight(int u, int v) const;  // 0 when absent
  std::vector<int> neighbors(int v) const;
  bool unit_weights() const;
  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Vertex numbering, frozen because catalog bases refer to it:
//  path     1-2-...-k
//  cycle    path plus the edge {k,1}
//  star     leaves 1..n, root n+1, edge {i,n+1} has weight w_i
//  complete all pairs of 1..n
//  flower   petal j owns a run of consecutive ids forming a path whose two
//           ends are joined to the root; the root is the last vertex
WeightedGraph build_path(int k);
WeightedGraph build_cycle(int k);
WeightedGraph build_star(const std::vector<double>& weights);
WeightedGraph build_complete(int n);
WeightedGraph build_flower(const std::vector<int>& petal_orders);
WeightedGraph build_from_edges(int n, const std::vector<Edge>& edges);

// Disjoint union plus the bridge {v1, n1 + v2} of weight d.
WeightedGraph couple(const WeightedGraph& g1, int v1, const WeightedGraph& g2, int v2, double d);

struct VertexDeletion {
  WeightedGraph graph;
  std::vector<int> old_to_new;  // indexed by old id; 0 marks a deleted vertex
  std::vector<int> new_to_old;  // indexed by new id
};
VertexDeletion delete_vertices(const WeightedGraph& g, const std::vector<int>& vs);

Eigen::MatrixXd adjacency_matrix(const WeightedGraph& g);

// Every simple cycle (length >= 3) through v, each distinct cycle once, as the
// vertex sequence starting at v. Distinct cycles may share a vertex set.
std::vector<std::vector<int>> simple_cycles_through(const WeightedGraph& g, int v);
inline constexpr std::size_t kCycleCap = 10000;

struct TailSpec {
  int attach = 1;
  double bridge = 1.0;
  std::vector<double> tail_weights;  // a_1..a_q between tail vertices, then 1s
};

struct TailedGraph {
  WeightedGraph finite;
  std::vector<TailSpec> tails;
};

struct FamilySpec {
  std::string id;
  std::map<std::string, std::vector<double>> params;
};

using InfiniteGraphSpec = std::variant<TailedGraph, FamilySpec>;

TailedGraph make_tailed(WeightedGraph g, std::vector<TailSpec> tails);
void validate_tail(const WeightedGraph& g, const TailSpec& t);

// Principal block of order n of a tailed graph: finite vertices first, then tail
// vertices in round-robin order over the tails.
WeightedGraph truncate_tailed(const TailedGraph& tg, int n);

}  // namespace gspec
