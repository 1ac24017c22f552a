#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gspec/poly.hpp"

namespace gspec {

// N-periodic one-sided Jacobi matrix; b_{n+N} = b_n, a_{n+N} = a_n.
class PeriodicJacobi {
 public:
  PeriodicJacobi() = default;
  PeriodicJacobi(std::vector<double> b, std::vector<double> a);

  int period() const { return static_cast<int>(b_.size()); }
  const std::vector<double>& b() const { return b_; }
  const std::vector<double>& a() const { return a_; }
  double b_at(int n) const;  // 1-based, any n >= 1
  double a_at(int n) const;  // a_0 = 1 by convention

 private:
  std::vector<double> b_, a_;
};

// p_0..p_upto (p_0 = 0, p_1 = 1) and q_0..q_upto (q_0 = -1, q_1 = 0).
std::vector<RealPolynomial> first_kind_polynomials(const PeriodicJacobi& j, int upto);
std::vector<RealPolynomial> second_kind_polynomials(const PeriodicJacobi& j, int upto);

// Product of the one-step matrices [[(l-b_k)/a_k, -1/a_k], [a_k, 0]], k = n..1.
Eigen::Matrix2d transfer_matrix(const PeriodicJacobi& j, double lambda, int n);

// D = p_{N+1} - a_N q_N and gamma = p_{N+1} + a_N q_N.
RealPolynomial discriminant(const PeriodicJacobi& j);
RealPolynomial gamma_polynomial(const PeriodicJacobi& j);

struct Gap {
  Interval span;            // [beta_k, alpha_{k+1}]
  int index_from_right = 0; // 1 for the rightmost gap
  int sign = -1;            // -1 on odd indices
  bool open = true;
};

struct BandStructure {
  std::vector<Interval> bands;  // ascending, exactly N
  std::vector<Gap> gaps;        // N-1, ascending
};

inline constexpr double kClosedGapTol = 1e-10;
inline constexpr double kEdgeTol = 1e-9;

BandStructure essential_bands(const PeriodicJacobi& j);

enum class GapRootClass { eigenvalue, rejected, edge, closed_gap, indeterminate };
std::string to_string(GapRootClass c);

struct GapRoot {
  double lambda = 0.0;
  int gap_index_from_right = 0;
  GapRootClass cls = GapRootClass::rejected;
  double gamma = 0.0;
};

// Every root of p_N with its classification under the sign rule.
std::vector<GapRoot> classify_gap_roots(const PeriodicJacobi& j);
std::vector<double> gap_eigenvalues(const PeriodicJacobi& j);

// Weyl function m(lambda), lambda off the bands and off the zeros of p_N.
double weyl_function(const PeriodicJacobi& j, double lambda);

}  // namespace gspec
