#include "gspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gspec {

std::string to_string(EigenClass c) {
  switch (c) {
    case EigenClass::discrete: return "discrete";
    case EigenClass::hidden: return "hidden";
    case EigenClass::embedded: return "embedded";
  }
  return "unknown";
}

std::vector<Interval> Spectrum::support() const {
  std::vector<Interval> out;
  for (const auto& b : bands) {
    if (!out.empty() && b.span.lo <= out.back().hi) out.back().hi = std::max(out.back().hi, b.span.hi);
    else out.push_back(b.span);
  }
  return out;
}

bool Spectrum::in_bands(double x, double tol) const {
  for (const auto& b : bands)
    if (x >= b.span.lo - tol && x <= b.span.hi + tol) return true;
  return false;
}

int Spectrum::band_multiplicity(double x) const {
  int m = 0;
  for (const auto& b : bands)
    if (x >= b.span.lo && x <= b.span.hi) m = std::max(m, b.multiplicity);
  return m;
}

std::vector<Eigenvalue> Spectrum::of_class(EigenClass c) const {
  std::vector<Eigenvalue> out;
  for (const auto& e : eigenvalues)
    if (e.cls == c) out.push_back(e);
  return out;
}

const Eigenvalue* Spectrum::find(double x, double tol) const {
  for (const auto& e : eigenvalues)
    if (std::abs(e.value - x) <= tol) return &e;
  return nullptr;
}

void SpectrumBuilder::add_band(Interval iv, int multiplicity) {
  if (!(iv.lo <= iv.hi)) throw std::invalid_argument("band with lo > hi");
  if (multiplicity < 1) throw std::invalid_argument("band multiplicity must be positive");
  bands_.push_back({iv, multiplicity});
}

void SpectrumBuilder::add_eigenvalue(double x, int multiplicity) {
  if (multiplicity < 1) throw std::invalid_argument("eigenvalue multiplicity must be positive");
  eigs_.push_back({x, multiplicity, false});
}

void SpectrumBuilder::add_infinite_eigenvalue(double x) { eigs_.push_back({x, 0, true}); }

void SpectrumBuilder::add_note(std::string s) {
  if (std::find(notes_.begin(), notes_.end(), s) == notes_.end()) notes_.push_back(std::move(s));
}

void SpectrumBuilder::merge(const Spectrum& s) {
  for (const auto& b : s.bands) add_band(b.span, b.multiplicity);
  for (const auto& e : s.eigenvalues) {
    if (e.infinite) add_infinite_eigenvalue(e.value);
    else add_eigenvalue(e.value, e.multiplicity);
  }
  for (const auto& n : s.notes) add_note(n);
}

Spectrum SpectrumBuilder::build(double cluster_tol) const {
  Spectrum out;
  // elementary pieces between consecutive breakpoints
  std::vector<double> cuts;
  for (const auto& b : bands_) {
    cuts.push_back(b.span.lo);
    cuts.push_back(b.span.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> pts;
  for (double c : cuts)
    if (pts.empty() || c - pts.back() > 1e-12 * std::max(1.0, std::abs(c))) pts.push_back(c);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double mid = 0.5 * (pts[k] + pts[k + 1]);
    int m = 0;
    for (const auto& b : bands_)
      if (b.span.lo <= mid && mid <= b.span.hi) m += b.multiplicity;
    if (m == 0) continue;
    if (!out.bands.empty() && out.bands.back().multiplicity == m &&
        std::abs(out.bands.back().span.hi - pts[k]) <= 1e-12 * std::max(1.0, std::abs(pts[k])))
      out.bands.back().span.hi = pts[k + 1];
    else
      out.bands.push_back({{pts[k], pts[k + 1]}, m});
  }

  std::vector<Raw> raw = eigs_;
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.x < b.x; });
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    double sum = 0.0;
    int mult = 0, count = 0;
    bool inf = false;
    while (j < raw.size() && raw[j].x - raw[i].x <= cluster_tol * std::max(1.0, std::abs(raw[i].x))) {
      sum += raw[j].x;
      mult += raw[j].mult;
      inf = inf || raw[j].inf;
      ++count;
      ++j;
    }
    Eigenvalue e;
    e.value = sum / count;
    if (std::abs(e.value) < 1e-13) e.value = 0.0;  // rounding residue from block eigensolves
    e.infinite = inf;
    e.multiplicity = inf ? 0 : mult;
    const bool inside = out.in_bands(e.value, cluster_tol);
    if (inside) {
      e.cls = inf ? EigenClass::embedded : EigenClass::hidden;
    } else {
      e.cls = EigenClass::discrete;
      if (inf) out.notes.push_back("infinite-multiplicity eigenvalue off the bands at " + std::to_string(e.value));
    }
    for (const auto& b : out.bands)
      if (std::abs(e.value - b.span.lo) <= cluster_tol || std::abs(e.value - b.span.hi) <= cluster_tol) e.edge = true;
    out.eigenvalues.push_back(e);
    i = j;
  }
  for (const auto& n : notes_) out.notes.push_back(n);
  return out;
}

}  // namespace gspec
