#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gspec/asymptotics.hpp"
#include "gspec/catalog.hpp"
#include "gspec/graph_io.hpp"
#include "gspec/jacobi.hpp"
#include "gspec/reduction.hpp"

namespace gspec::cli {

namespace {

constexpr double kDisagreementTol = 1e-6;
constexpr double kMassTol = 1e-8;
constexpr double kInjectOffset = 1e-3;

InfiniteGraphSpec load_input(const std::string& input) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') return parse_graph_json(input);
  return load_graph_json(input);
}

void emit(const std::string& data, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << data;
}

struct SpectrumArgs {
  std::string input, method = "canonical", out;
  int oracle_n = 0;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream& err) {
  const Method m = parse_method(a.method);
  const InfiniteGraphSpec spec = load_input(a.input);
  std::string why;
  if (m != Method::canonical && !schur_applicable(spec, &why)) throw InputError(why);

  SpectrumReport r;
  r.method = a.method;
  if (m == Method::schur) {
    r.spectrum = schur_spectrum(spec);
  } else {
    r.spectrum = canonical_spectrum(spec);
  }
  int code = kOk;
  if (m == Method::both) {
    const double d = discrete_discrepancy(r.spectrum, schur_spectrum(spec));
    r.residuals["cross_method_discrepancy"] = d;
    if (!(d <= kDisagreementTol)) {
      err << "methods disagree: max discrepancy " << d << "\n";
      code = kDisagreement;
    }
  }
  if (a.oracle_n > 0) {
    const OracleCheck o = finite_section_check(spec, r.spectrum, a.oracle_n);
    r.residuals["oracle_max_eigen_error"] = o.max_eigen_error;
    r.residuals["oracle_multiplicities_ok"] = o.multiplicities_ok ? 1.0 : 0.0;
    if (!o.multiplicities_ok) err << "finite section: " << o.detail << "\n";
  }
  emit(report_to_json(r) + "\n", a.out, out);
  return code;
}

struct MeasureArgs {
  std::string input, out;
  int samples = 0;
};

CanonicalForm tailed_form(const InfiniteGraphSpec& spec) {
  const auto* tg = std::get_if<TailedGraph>(&spec);
  if (!tg) throw InputError("measure needs an explicit graph with a tail, not a family");
  if (tg->tails.size() == 1) return reduce_single_tail(tg->finite, tg->tails.front());
  const int v = tg->tails.front().attach;
  for (const auto& t : tg->tails)
    if (t.attach != v || t.bridge != 1.0 || !t.tail_weights.empty())
      throw InputError("measure handles several tails only as unit rays at one vertex");
  return multi_ray_attach(tg->finite, v, static_cast<int>(tg->tails.size()));
}

int cmd_measure(const MeasureArgs& a, std::ostream& out, std::ostream& err) {
  const CanonicalForm cf = tailed_form(load_input(a.input));
  const FiniteRankJacobi* j = nullptr;
  for (const auto& c : cf.jacobi_components)
    if (const auto* f = std::get_if<FiniteRankJacobi>(&c.op); f && c.shift == 0.0) {
      j = f;
      break;
    }
  if (!j) throw InputError("no finite-rank Jacobi component to take a measure of");
  const SpectralMeasure mu = spectral_measure(*j);
  const double total = mu.total_mass();
  const double mass_err = std::abs(total - 1.0);

  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "# total_mass=" << total << ",ac_mass=" << mu.ac_mass << ",mass_error=" << mass_err
      << ",check=" << (mass_err <= kMassTol ? "PASS" : "FAIL") << "\n";
  if (a.samples > 0) {
    csv << "x,w\n";
    // Chebyshev nodes, ascending
    for (int k = a.samples; k >= 1; --k) {
      const double x = 2.0 * std::cos((2.0 * k - 1.0) * M_PI / (2.0 * a.samples));
      csv << x << "," << mu.ac_weight(x) << "\n";
    }
  }
  csv << "# masses\nlambda,mass\n";
  for (const auto& [l, s] : mu.masses) csv << l << "," << s << "\n";
  emit(csv.str(), a.out, out);
  if (mass_err > kMassTol) err << "total mass off by " << mass_err << "\n";
  return kOk;
}

int cmd_examples(const std::string& filter, bool inject, std::ostream& out, std::ostream& err) {
  const auto list = filter_catalog(filter);
  if (list.empty()) {
    err << "no fixtures match '" << filter << "'\n";
    return kInputError;
  }
  const double tol = default_tolerance();
  int failed = 0;
  for (const Fixture* f : list) {
    const FixtureResult r = run_fixture(*f, tol, inject ? kInjectOffset : 0.0);
    if (!r.pass) ++failed;
    out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(26) << f->name << " residual=" << std::setprecision(3)
        << std::scientific << r.residual << std::defaultfloat;
    if (!r.pass) out << "  " << r.detail;
    out << "\n";
  }
  err << (list.size() - failed) << "/" << list.size() << " fixtures passed (tol " << tol << ")\n";
  return failed == 0 ? kOk : kDisagreement;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of infinite graphs: finite graphs with tails, ladders and chains of cycles"};
  app.name("graph-spectra");
  app.require_subcommand(1);

  SpectrumArgs sa;
  auto* sp = app.add_subcommand("spectrum", "Compute the spectrum of one input");
  sp->add_option("--input", sa.input, "graph JSON file, or inline JSON")->required();
  sp->add_option("--method", sa.method, "canonical, schur or both")
      ->check(CLI::IsMember({"canonical", "schur", "both"}));
  sp->add_option("--oracle-n", sa.oracle_n, "also compare against a finite section of this order")
      ->check(CLI::Range(1, static_cast<int>(kOracleCap)));
  sp->add_option("--out", sa.out, "output file (default stdout)");

  MeasureArgs ma;
  auto* me = app.add_subcommand("measure", "Sample the spectral measure at the attachment vertex");
  me->add_option("--input", ma.input, "graph JSON file, or inline JSON")->required();
  me->add_option("--samples", ma.samples, "number of Chebyshev points in (-2,2)")->required()->check(CLI::NonNegativeNumber);
  me->add_option("--out", ma.out, "output file (default stdout)");

  std::string filter;
  bool inject = false;
  auto* ex = app.add_subcommand("examples", "Run the fixture catalog");
  ex->add_option("--filter", filter, "run fixtures whose name contains this");
  ex->add_flag("--inject-failure", inject, "shift every expected value")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*sp) return cmd_spectrum(sa, out, err);
    if (*me) return cmd_measure(ma, out, err);
    return cmd_examples(filter, inject, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace gspec::cli
