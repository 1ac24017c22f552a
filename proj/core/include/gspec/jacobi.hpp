#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "gspec/poly.hpp"

namespace gspec {

// One-sided Jacobi matrix equal to the free matrix (b = 0, a = 1) beyond q.
// Entries are 1-based in the accessors; trailing free entries are trimmed.
class FiniteRankJacobi {
 public:
  FiniteRankJacobi() = default;
  FiniteRankJacobi(std::vector<double> b, std::vector<double> a);

  int q() const { return static_cast<int>(b_.size()); }
  const std::vector<double>& b() const { return b_; }
  const std::vector<double>& a() const { return a_; }
  double b_at(int n) const { return (n >= 1 && n <= q()) ? b_[n - 1] : 0.0; }
  double a_at(int n) const { return (n >= 1 && n <= q()) ? a_[n - 1] : 1.0; }
  bool is_free() const { return b_.empty(); }
  // prod_{j<=q} a_j, the finite form of the infinite product
  double a_product() const;

 private:
  std::vector<double> b_, a_;
};

// Jost function u(z) (polynomial, u(0) != 0, degree <= 2q).
RealPolynomial jost_polynomial(const FiniteRankJacobi& j);
// prod a_j * u(z), run in exact arithmetic when b_n and a_n^2 are rational.
std::optional<RationalPolynomial> jost_numerator_exact(const FiniteRankJacobi& j);
RealPolynomial jost_numerator(const FiniteRankJacobi& j);

std::complex<double> perturbation_determinant(const FiniteRankJacobi& j, std::complex<double> z);
double jost_determinant_identity_check(const FiniteRankJacobi& j, std::complex<double> z);

struct DiscreteEigenvalue {
  double lambda = 0.0;
  double z = 0.0;
};

struct JostAnalysis {
  std::vector<DiscreteEigenvalue> eigenvalues;  // roots strictly inside (-1,1), sorted by lambda
  std::vector<double> resonances;               // roots on or within the margin of z = +-1
};

inline constexpr double kDiskMargin = 1e-9;

JostAnalysis analyze_jost(const FiniteRankJacobi& j);
std::vector<DiscreteEigenvalue> discrete_spectrum(const FiniteRankJacobi& j);

struct SpectralMeasure {
  std::function<double(double)> ac_weight;        // on (-2, 2)
  std::vector<std::pair<double, double>> masses;  // (lambda_j, sigma_j)
  double ac_mass = 0.0;
  double total_mass() const;
};

SpectralMeasure spectral_measure(const FiniteRankJacobi& j);

// Q with |u(e^{it})|^2 = Q(2 cos t).
RealPolynomial jost_modulus_polynomial(const FiniteRankJacobi& j);

// Leading n x n block as a dense matrix.
Eigen::MatrixXd truncated_matrix(const FiniteRankJacobi& j, int n);

}  // namespace gspec
