#pragma once

#include <Eigen/Dense>
#include <complex>
#include <variant>
#include <vector>

#include "gspec/graph.hpp"
#include "gspec/jacobi.hpp"
#include "gspec/periodic.hpp"
#include "gspec/spectrum.hpp"

namespace gspec {

// Jacobi form of one ladder component: b_n = sign * [n in rungs], a_n = 1.
struct SparseLadderSpec {
  int sign = 1;
  std::vector<int> rungs;  // increasing prefix of the rung set, 1-based
};

// Jacobi form of the chain of cycles C_{2 n_j}: cell j contributes
// a = (sqrt2, 1, ..., 1, sqrt2) of length n_j. Beyond the prefix the matrix is free.
struct SparseCycleChainSpec {
  std::vector<int> sizes;  // n_j >= 2
};

// Symmetric Toeplitz adjacency [alpha_{|i-k|}], alpha_0 = 0.
struct ToeplitzSpec {
  std::vector<int> alpha;  // alpha_1..alpha_m, each 0 or 1
};

using OperatorSpec =
    std::variant<FiniteRankJacobi, PeriodicJacobi, SparseLadderSpec, SparseCycleChainSpec, TailedGraph, ToeplitzSpec>;

inline constexpr int kOracleCap = 10000;

struct FiniteSection {
  Eigen::MatrixXd matrix;
  std::vector<double> eigenvalues;  // ascending
};

Eigen::MatrixXd section_matrix(const OperatorSpec& spec, int n);
// Jacobi-type specs go through the tridiagonal solver, everything else is dense.
std::vector<double> section_eigenvalues(const OperatorSpec& spec, int n);
FiniteSection finite_section(const OperatorSpec& spec, int n);

// Eigenvalue count below sigma for the order-n section of a tailed graph. Each
// tail is a tridiagonal block, so inertia splits into Sturm counts on the tails
// plus the inertia of a small Schur complement on the finite part.
int tailed_section_count_below(const TailedGraph& tg, int n, double sigma);
// Eigenvalues of that section in [lo, hi] (with repetition), to within tol.
std::vector<double> tailed_section_eigenvalues_in(const TailedGraph& tg, int n, double lo, double hi,
                                                  double tol = 1e-13);

// Extreme eigenvalues of the order-n Toeplitz section by bisection on a banded
// Cholesky definiteness test.
std::pair<double, double> toeplitz_extreme_eigenvalues(const ToeplitzSpec& t, int n, double tol = 1e-12);

enum class PerturbationKind { diagonal, offdiagonal };
struct PerturbationEntry {
  int site = 0;  // offdiagonal entries sit on the bond (site, site+1)
  PerturbationKind kind = PerturbationKind::diagonal;
  double value = 0.0;
};
struct TwoSidedPerturbation {
  std::vector<PerturbationEntry> entries;
};

std::complex<double> two_sided_perturbation_determinant(const TwoSidedPerturbation& p, std::complex<double> z);
// (z^2-1)^s L(z) with s the support size; a polynomial in z.
RealPolynomial two_sided_determinant_numerator(const TwoSidedPerturbation& p);
// z_j in (-1,1) with L(z_j) = 0, and lambda_j = z_j + 1/z_j
std::vector<DiscreteEigenvalue> two_sided_eigenvalues(const TwoSidedPerturbation& p);

// The catalogued right limits (up to shifts) of the two sparse families.
std::vector<TwoSidedPerturbation> sparse_ladder_right_limits(int sign, bool rungs_present);
std::vector<TwoSidedPerturbation> sparse_cycle_chain_right_limits(bool cycles_present);
// Rank-two factorization with kappa = sqrt2 - 1, evaluated directly.
std::complex<double> cycle_chain_kappa_determinant(std::complex<double> z);

Spectrum sparse_ladder_essential_spectrum(const std::vector<int>& rungs);
Spectrum sparse_cycle_chain_essential_spectrum(const std::vector<int>& sizes);

// S_k = sum_{n<=k} ||T_n(lambda)||^{-2}, k = 1..n
std::vector<double> simon_stolz_partial_sums(const OperatorSpec& spec, double lambda, int n);

// p with phi(e^{i theta}) = p(cos theta)
RealPolynomial toeplitz_symbol_polynomial(const ToeplitzSpec& t);
Spectrum banded_toeplitz_spectrum(const ToeplitzSpec& t);
Spectrum comb_spectrum();

}  // namespace gspec
