#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gspec/asymptotics.hpp"
#include "gspec/graph.hpp"
#include "gspec/reduction.hpp"
#include "gspec/spectrum.hpp"

namespace gspec {

// Infinite graph families. Families with a known invariant decomposition carry
// the claimed canonical form and a checkable basis on a finite window; the rest
// only report their spectrum.
struct FamilyModel {
  std::string id;
  std::string description;
  bool has_form = false;
  CanonicalForm form;
  std::function<WeightedGraph(int)> window;   // cells -> finite piece
  std::function<InvariantBasis(int)> basis;   // cells -> claims on that piece
  std::function<Spectrum()> spectrum;
  std::function<OperatorSpec()> oracle;       // finite-section operator, when one exists
};

std::vector<std::string> family_ids();
FamilyModel family_model(const FamilySpec& spec);
Spectrum family_spectrum(const FamilySpec& spec);

// Same basis with the claimed actions of the first two components exchanged.
InvariantBasis swap_first_claims(InvariantBasis b);

// Windows, numbered as in the families above.
WeightedGraph ladder_window(int cells, const std::function<bool(int)>& rung);
WeightedGraph comb_window(int spine);
TailedGraph cycle_two_tails(int n);

}  // namespace gspec
