#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "gspec/graph.hpp"
#include "gspec/spectrum.hpp"

namespace gspec {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "-0.25", "2/3", "sqrt(2)", "sqrt(5/4)", "-sqrt(3)"
double parse_weight(const std::string& s);

// Schema:
//   {"n": int, "edges": [[i, j] | [i, j, w], ...],
//    "tails": [{"attach": i, "bridge": w, "tail_weights": [w, ...]}, ...],
//    "family": {"id": string, "params": {key: w | [w, ...]}}}
// Weights are numbers or strings accepted by parse_weight. A document with
// "family" describes a named family and must not also carry tails.
InfiniteGraphSpec parse_graph_json(const std::string& text);
InfiniteGraphSpec load_graph_json(const std::string& path);
std::string graph_to_json(const InfiniteGraphSpec& spec);

struct SpectrumReport {
  Spectrum spectrum;
  std::string method;
  std::map<std::string, double> residuals;
};

// {"bands": [[lo, hi, mult], ...],
//  "eigenvalues": [{"value": x, "mult": k | "inf", "class": c}, ...],
//  "method": s, "residuals": {...}, "notes": [...]}
std::string report_to_json(const SpectrumReport& r, int indent = 2);
SpectrumReport report_from_json(const std::string& text);

}  // namespace gspec
