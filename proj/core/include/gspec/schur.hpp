#pragma once

#include <utility>
#include <vector>

#include "gspec/graph.hpp"
#include "gspec/poly.hpp"

namespace gspec {

// Characteristic polynomial det(lambda - A) by Schwenk's vertex recursion.
// Unit weights only, at most 64 vertices.
RationalPolynomial schwenk_characteristic(const WeightedGraph& g);

// Diagonal Green's function G_v = numerator / denominator.
struct GreensData {
  RealPolynomial numerator;    // char. polynomial of g minus v
  RealPolynomial denominator;  // char. polynomial of g
};
GreensData greens_function_finite(const WeightedGraph& g, int v);

struct SchurEigenvalue {
  double lambda = 0.0;
  double x = 0.0;  // lambda = x + 1/x, |x| < 1
  int multiplicity = 1;
};

// Eigenvalues off [-2,2] of g with one unit tail at `attach`, from
// P(lambda) - x P_1(lambda) = 0. Blind to anything inside [-2,2].
std::vector<SchurEigenvalue> schur_discrete_spectrum(const WeightedGraph& g, int attach);

// Flower of cycles C_{k_j + 1} glued at the root, tail at the root:
// the two eigenvalues lambda_- < -2 < 2 < lambda_+ (k_j = petal path lengths).
std::pair<double, double> flower_discrete_spectrum(const std::vector<int>& petal_paths);

}  // namespace gspec
