#include "gspec/graph_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>

#include "json.hpp"
#include <sstream>

namespace gspec {

namespace {

using nlohmann::json;

double parse_plain(const std::string& s) {
  const auto slash = s.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      const double v = std::stod(s, &used);
      if (used != s.size()) throw InputError("bad number '" + s + "'");
      return v;
    }
    const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    // exact quotient of the two decimal parts
    const Rational den(q);
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    const Rational r = Rational(p) / den;
    return to_double(r);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad number '" + s + "'");
  }
}

double weight_of(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_weight(j.get<std::string>());
  throw InputError(where + ": weight must be a number or a string");
}

int int_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<int>();
}

json number_json(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in output");
  return v;
}

}  // namespace

double parse_weight(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty weight");
  double sign = 1.0;
  if (s[0] == '-' && s.rfind("-sqrt(", 0) == 0) {
    sign = -1.0;
    s = s.substr(1);
  }
  if (s.rfind("sqrt(", 0) == 0) {
    if (s.back() != ')') throw InputError("bad weight '" + raw + "'");
    const double r = parse_plain(s.substr(5, s.size() - 6));
    if (r < 0) throw InputError("negative radicand in '" + raw + "'");
    return sign * std::sqrt(r);
  }
  return parse_plain(s);
}

InfiniteGraphSpec parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level must be an object");
  try {
    if (doc.contains("family")) {
      if (doc.contains("tails") && !doc["tails"].empty()) throw InputError("a family document cannot carry tails");
      const json& f = doc["family"];
      if (!f.is_object() || !f.contains("id") || !f["id"].is_string()) throw InputError("family needs a string 'id'");
      FamilySpec fs;
      fs.id = f["id"].get<std::string>();
      if (f.contains("params")) {
        if (!f["params"].is_object()) throw InputError("family params must be an object");
        for (const auto& [k, v] : f["params"].items()) {
          std::vector<double> vals;
          if (v.is_array())
            for (const auto& x : v) vals.push_back(weight_of(x, "param " + k));
          else
            vals.push_back(weight_of(v, "param " + k));
          fs.params[k] = std::move(vals);
        }
      }
      return fs;
    }
    if (!doc.contains("n")) throw InputError("missing 'n'");
    const int n = int_of(doc["n"], "n");
    if (n < 1) throw InputError("'n' must be positive");
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
      if (!doc["edges"].is_array()) throw InputError("'edges' must be an array");
      for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw InputError("edge must be [i, j] or [i, j, w]");
        edges.push_back({int_of(e[0], "edge"), int_of(e[1], "edge"), e.size() == 3 ? weight_of(e[2], "edge") : 1.0});
      }
    }
    WeightedGraph g = build_from_edges(n, edges);
    std::vector<TailSpec> tails;
    if (doc.contains("tails")) {
      if (!doc["tails"].is_array()) throw InputError("'tails' must be an array");
      for (const auto& t : doc["tails"]) {
        if (!t.is_object() || !t.contains("attach")) throw InputError("tail needs 'attach'");
        TailSpec ts;
        ts.attach = int_of(t["attach"], "attach");
        if (t.contains("bridge")) ts.bridge = weight_of(t["bridge"], "bridge");
        if (t.contains("tail_weights")) {
          if (!t["tail_weights"].is_array()) throw InputError("'tail_weights' must be an array");
          for (const auto& w : t["tail_weights"]) ts.tail_weights.push_back(weight_of(w, "tail weight"));
        }
        tails.push_back(ts);
      }
    }
    if (tails.empty()) throw InputError("a graph document needs at least one tail (or a family)");
    return make_tailed(std::move(g), std::move(tails));
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

InfiniteGraphSpec load_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

std::string graph_to_json(const InfiniteGraphSpec& spec) {
  json doc;
  if (const auto* f = std::get_if<FamilySpec>(&spec)) {
    json params = json::object();
    for (const auto& [k, v] : f->params) params[k] = v;
    doc["family"] = {{"id", f->id}, {"params", params}};
  } else {
    const auto& tg = std::get<TailedGraph>(spec);
    doc["n"] = tg.finite.order();
    json edges = json::array();
    for (const auto& e : tg.finite.edges()) edges.push_back({e.i, e.j, number_json(e.w)});
    doc["edges"] = edges;
    json tails = json::array();
    for (const auto& t : tg.tails) tails.push_back({{"attach", t.attach}, {"bridge", t.bridge}, {"tail_weights", t.tail_weights}});
    doc["tails"] = tails;
  }
  return doc.dump(2);
}

std::string report_to_json(const SpectrumReport& r, int indent) {
  json doc;
  json bands = json::array();
  for (const auto& b : r.spectrum.bands) bands.push_back({number_json(b.span.lo), number_json(b.span.hi), b.multiplicity});
  doc["bands"] = bands;
  json eigs = json::array();
  for (const auto& e : r.spectrum.eigenvalues) {
    json j{{"value", number_json(e.value)}, {"class", to_string(e.cls)}};
    if (e.infinite)
      j["mult"] = "inf";
    else
      j["mult"] = e.multiplicity;
    if (e.edge) j["edge"] = true;
    eigs.push_back(j);
  }
  doc["eigenvalues"] = eigs;
  doc["method"] = r.method;
  json res = json::object();
  for (const auto& [k, v] : r.residuals) res[k] = std::isfinite(v) ? json(v) : json("inf");
  doc["residuals"] = res;
  doc["notes"] = r.spectrum.notes;
  return doc.dump(indent);
}

SpectrumReport report_from_json(const std::string& text) {
  SpectrumReport r;
  try {
    const json doc = json::parse(text);
    for (const auto& b : doc.at("bands"))
      r.spectrum.bands.push_back({{b.at(0).get<double>(), b.at(1).get<double>()}, b.at(2).get<int>()});
    for (const auto& e : doc.at("eigenvalues")) {
      Eigenvalue ev;
      ev.value = e.at("value").get<double>();
      if (e.at("mult").is_string()) {
        ev.infinite = true;
        ev.multiplicity = 0;
      } else {
        ev.multiplicity = e.at("mult").get<int>();
      }
      const std::string c = e.at("class").get<std::string>();
      ev.cls = c == "hidden" ? EigenClass::hidden : c == "embedded" ? EigenClass::embedded : EigenClass::discrete;
      ev.edge = e.value("edge", false);
      r.spectrum.eigenvalues.push_back(ev);
    }
    r.method = doc.at("method").get<std::string>();
    for (const auto& [k, v] : doc.at("residuals").items())
      r.residuals[k] = v.is_string() ? std::numeric_limits<double>::infinity() : v.get<double>();
    r.spectrum.notes = doc.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad report: ") + e.what());
  }
  return r;
}

}  // namespace gspec
