#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "gspec/graph.hpp"
#include "gspec/jacobi.hpp"
#include "gspec/periodic.hpp"
#include "gspec/spectrum.hpp"

namespace gspec {

// shift * I + op; multiplicity counts identical orthogonal copies
struct JacobiComponent {
  std::variant<FiniteRankJacobi, PeriodicJacobi> op;
  double shift = 0.0;
  int multiplicity = 1;
  std::string label;

  bool periodic() const { return std::holds_alternative<PeriodicJacobi>(op); }
  double b_at(int n) const;  // including the shift
  double a_at(int n) const;
};

// Finite block repeated infinitely often along the graph.
struct RepeatedBlock {
  Eigen::MatrixXd block;
  std::string label;
};

struct CanonicalForm {
  Eigen::MatrixXd finite_component;  // may be 0 x 0
  std::vector<JacobiComponent> jacobi_components;
  std::vector<RepeatedBlock> repeated_blocks;
  int free_copies = 0;               // extra J_0 summands
  int krylov_dimension = 0;          // 0 when not produced by a Krylov run
  std::vector<std::string> notes;
};

inline constexpr double kBreakdownTol = 1e-10;

// Lanczos with full reorthogonalization from the attachment vertex.
CanonicalForm reduce_single_tail(const WeightedGraph& g, const TailSpec& tail);
CanonicalForm reduce_single_tail(const Eigen::MatrixXd& adjacency, const TailSpec& tail);
// p tails at v: bridge sqrt(p) and p - 1 free copies
CanonicalForm multi_ray_attach(const WeightedGraph& g, int v, int p);

struct RaysResult {
  CanonicalForm form;
  Spectrum spectrum;
};
// p rays at every vertex of an unweighted graph
RaysResult rays_at_every_vertex(const WeightedGraph& g, int p);

Spectrum component_spectrum(const JacobiComponent& c);
Spectrum spectrum_of_canonical(const CanonicalForm& cf);

// finite component plus the leading rows of every Jacobi component, m rows in all
// (single Jacobi component only)
Eigen::MatrixXd canonical_finite_section(const CanonicalForm& cf, int m);

// ---- verification of prescribed invariant decompositions ----

using SparseVector = std::vector<std::pair<int, double>>;  // (vertex id, coefficient)

struct ComponentClaim {
  std::string label;
  std::function<SparseVector(int)> basis;  // k >= 1
  std::function<double(int, int)> entry;   // claimed matrix entry, 1-based
  int bandwidth = 1;
  int count = 0;                           // number of basis vectors checked
};

struct InvariantBasis {
  WeightedGraph window;  // finite piece of the infinite graph
  int interior = 0;      // vertices <= interior have all their neighbours in the window
  std::vector<ComponentClaim> components;
};

struct VerifyReport {
  bool ok = false;
  double max_residual = 0.0;
  std::string detail;
};

// Throws std::invalid_argument naming the pair when the family is not orthonormal.
VerifyReport verify_invariant_decomposition(const InvariantBasis& b, double tol = 1e-10);

ComponentClaim claim_jacobi(const JacobiComponent& c, std::function<SparseVector(int)> basis, int count);
// block-diagonal claim: vectors (k-1)/s share a block of size s
ComponentClaim claim_repeated(const RepeatedBlock& r, std::function<SparseVector(int)> basis, int count);
ComponentClaim claim_finite(const std::string& label, const Eigen::MatrixXd& f, std::function<SparseVector(int)> basis);

}  // namespace gspec
