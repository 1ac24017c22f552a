#pragma once

#include <string>
#include <vector>

#include "gspec/poly.hpp"

namespace gspec {

enum class EigenClass { discrete, hidden, embedded };
std::string to_string(EigenClass c);

struct Band {
  Interval span;
  int multiplicity = 1;
};

struct Eigenvalue {
  double value = 0.0;
  int multiplicity = 1;    // ignored when infinite
  bool infinite = false;
  EigenClass cls = EigenClass::discrete;
  bool edge = false;       // within the clustering tolerance of a band end
};

// bands: elementary pieces, ascending, adjacent pieces differ in multiplicity
struct Spectrum {
  std::vector<Band> bands;
  std::vector<Eigenvalue> eigenvalues;  // ascending
  std::vector<std::string> notes;

  // merged closed intervals, multiplicities ignored
  std::vector<Interval> support() const;
  bool in_bands(double x, double tol = 0.0) const;
  int band_multiplicity(double x) const;
  std::vector<Eigenvalue> of_class(EigenClass c) const;
  // eigenvalue within tol, or nullptr
  const Eigenvalue* find(double x, double tol = 1e-9) const;
};

inline constexpr double kClusterTol = 1e-9;

class SpectrumBuilder {
 public:
  void add_band(Interval iv, int multiplicity = 1);
  void add_eigenvalue(double x, int multiplicity = 1);
  void add_infinite_eigenvalue(double x);
  void add_note(std::string s);
  void merge(const Spectrum& s);  // bands and eigenvalues, classes recomputed
  Spectrum build(double cluster_tol = kClusterTol) const;

 private:
  struct Raw {
    double x;
    int mult;
    bool inf;
  };
  std::vector<Band> bands_;
  std::vector<Raw> eigs_;
  std::vector<std::string> notes_;
};

}  // namespace gspec
