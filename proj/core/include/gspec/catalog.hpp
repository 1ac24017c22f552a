#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gspec/families.hpp"
#include "gspec/graph.hpp"
#include "gspec/spectrum.hpp"

namespace gspec {

// ---- front end shared by the CLI and the fixtures ----

enum class Method { canonical, schur, both };
Method parse_method(const std::string& s);

// Canonical reduction plus Jost/periodic analysis. Several tails are accepted
// only when they are plain unit rays at one vertex; other multi-tail graphs
// must come in as named families.
Spectrum canonical_spectrum(const InfiniteGraphSpec& spec);
// Single unit tail only; reports [-2,2] and the eigenvalues off it.
bool schur_applicable(const InfiniteGraphSpec& spec, std::string* why = nullptr);
Spectrum schur_spectrum(const InfiniteGraphSpec& spec);
// Largest distance between the eigenvalues off [-2,2] of the two spectra,
// infinite when the counts differ.
double discrete_discrepancy(const Spectrum& a, const Spectrum& b);

struct OracleCheck {
  double max_eigen_error = 0.0;  // discrete eigenvalues vs nearest section eigenvalue
  bool multiplicities_ok = true; // hidden multiplicities, min over orders n and n+1
  std::string detail;
};
// Truncation of order n (and n + 1) against the claimed discrete and hidden spectrum.
OracleCheck finite_section_check(const InfiniteGraphSpec& spec, const Spectrum& s, int n);

// ---- fixtures ----

class Checker {
 public:
  explicit Checker(double inject = 0.0) : inject_(inject) {}
  void value(const std::string& what, double got, double want);
  void require(bool cond, const std::string& what);
  void residual(const std::string& what, double r);  // a residual that should be ~0
  double max_residual() const { return res_; }
  bool ok() const { return ok_; }
  const std::string& detail() const { return detail_; }

 private:
  void worst(const std::string& what, double r);
  double inject_;
  double res_ = 0.0;
  double worst_ = -1.0;
  bool ok_ = true;
  std::string detail_;
};

struct ExpectedPoint {
  double value = 0.0;
  int multiplicity = 1;  // 0 for infinite
  EigenClass cls = EigenClass::discrete;
};

struct Fixture {
  std::string name;
  std::string description;
  InfiniteGraphSpec spec;
  std::vector<ExpectedPoint> points;  // every eigenvalue, ascending
  std::vector<Interval> support;      // merged band support
  std::vector<std::string> notes;     // substrings that must appear among the notes
  bool cross_method = false;          // run the Schur method as well
  bool oracle = false;                // has a discrete or hidden part worth a finite-section check
  std::function<void(Checker&)> extra;
};

struct FixtureResult {
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

const std::vector<Fixture>& fixture_catalog();
std::vector<const Fixture*> filter_catalog(const std::string& substring);
// inject shifts every expected value, a negative control for the runner itself
FixtureResult run_fixture(const Fixture& f, double tol, double inject = 0.0);

double default_tolerance();  // GRAPH_SPECTRA_TOL or 1e-9

}  // namespace gspec
