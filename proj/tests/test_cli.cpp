#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gspec/graph_io.hpp"
#include "json.hpp"

using namespace gspec;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "graph-spectra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kStar5 = R"({"n": 6, "edges": [[1,6],[2,6],[3,6],[4,6],[5,6]], "tails": [{"attach": 6}]})";

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("gspec_cli_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("spectrum of the star with both methods") {
  const Run r = run({"spectrum", "--input", kStar5, "--method", "both"});
  REQUIRE(r.code == cli::kOk);
  const json doc = json::parse(r.out);
  CHECK(doc["method"] == "both");
  CHECK(doc["residuals"]["cross_method_discrepancy"].get<double>() < 1e-9);
  const auto& e = doc["eigenvalues"];
  REQUIRE(e.size() == 3);
  CHECK(std::abs(e[0]["value"].get<double>() + 2.5) < 1e-12);
  CHECK(e[1]["value"].get<double>() == 0.0);
  CHECK(e[1]["mult"] == 4);
  CHECK(e[1]["class"] == "hidden");
  CHECK(std::abs(e[2]["value"].get<double>() - 2.5) < 1e-12);
  CHECK(e[2]["class"] == "discrete");
  REQUIRE(doc["bands"].size() == 1);
  CHECK(doc["bands"][0] == json::array({-2.0, 2.0, 1}));
}

TEST_CASE("output round-trips through the report schema") {
  const auto out = std::filesystem::temp_directory_path() / "gspec_cli_report.json";
  const Run r = run({"spectrum", "--input", kStar5, "--method", "canonical", "--oracle-n", "300", "--out", out.string()});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  const SpectrumReport rep = report_from_json(ss.str());
  CHECK(rep.residuals.at("oracle_multiplicities_ok") == 1.0);
  CHECK(rep.residuals.at("oracle_max_eigen_error") < 1e-4);
  CHECK(report_to_json(rep) + "\n" == ss.str());
  // bit-stable numbers
  CHECK(rep.spectrum.eigenvalues.back().value == 2.5);
}

TEST_CASE("family input") {
  const auto p = temp_file("hex.json", R"({"family": {"id": "hexagon-ladder"}})");
  const Run r = run({"spectrum", "--input", p.string()});
  REQUIRE(r.code == cli::kOk);
  const json doc = json::parse(r.out);
  CHECK(doc["eigenvalues"].empty());
  double lo = 0, hi = 0;
  for (const auto& b : doc["bands"]) {
    lo = std::min(lo, b[0].get<double>());
    hi = std::max(hi, b[1].get<double>());
  }
  const double r17 = (1 + std::sqrt(17.0)) / 2;
  CHECK(std::abs(lo + r17) < 1e-10);
  CHECK(std::abs(hi - r17) < 1e-10);
}

TEST_CASE("input errors exit with 1") {
  CHECK(run({"spectrum", "--input", "/nonexistent/graph.json"}).code == cli::kInputError);
  CHECK(run({"spectrum", "--input", "{not json"}).code == cli::kInputError);
  const Run two = run({"spectrum", "--input", R"({"n": 3, "edges": [[1,2],[2,3]], "tails": [{"attach": 1}, {"attach": 3}]})",
                       "--method", "schur"});
  CHECK(two.code == cli::kInputError);
  CHECK(two.err.find("error:") != std::string::npos);
  CHECK(run({"spectrum", "--input", kStar5, "--method", "fourier"}).code == cli::kInputError);
  CHECK(run({"spectrum", "--input", kStar5, "--oracle-n", "20000"}).code == cli::kInputError);
  CHECK(run({"measure", "--input", kStar5}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
}

TEST_CASE("measure") {
  const Run r = run({"measure", "--input", kStar5, "--samples", "16"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line.find("check=PASS") != std::string::npos);
  std::getline(in, line);
  CHECK(line == "x,w");
  double prev = -3;
  for (int k = 0; k < 16; ++k) {
    std::getline(in, line);
    const double x = std::stod(line.substr(0, line.find(',')));
    CHECK(x > prev);
    CHECK(std::abs(x) < 2.0);
    prev = x;
  }
  std::getline(in, line);
  CHECK(line == "# masses");
  std::getline(in, line);
  std::vector<std::pair<double, double>> masses;
  while (std::getline(in, line)) {
    const auto c = line.find(',');
    masses.emplace_back(std::stod(line.substr(0, c)), std::stod(line.substr(c + 1)));
  }
  REQUIRE(masses.size() == 2);
  CHECK(std::abs(std::abs(masses[0].first) - 2.5) < 1e-12);
  CHECK(std::abs(masses[0].second - 0.375) < 1e-10);

  // the free matrix: semicircle density, total mass 1, no point masses
  const Run free = run({"measure", "--input", R"({"n": 1, "tails": [{"attach": 1}]})", "--samples", "5"});
  REQUIRE(free.code == cli::kOk);
  CHECK(free.out.find("check=PASS") != std::string::npos);
  std::istringstream fin(free.out);
  std::getline(fin, line);
  std::getline(fin, line);
  for (int k = 0; k < 5; ++k) {
    std::getline(fin, line);
    const auto c = line.find(',');
    const double x = std::stod(line.substr(0, c)), w = std::stod(line.substr(c + 1));
    CHECK(std::abs(w - std::sqrt(4 - x * x) / (2 * M_PI)) < 1e-12);
  }
  CHECK(free.out.substr(free.out.size() - 12) == "lambda,mass\n");

  const Run none = run({"measure", "--input", kStar5, "--samples", "0"});
  CHECK(none.out.find("x,w") == std::string::npos);
  CHECK(none.out.find("# masses") != std::string::npos);
}

TEST_CASE("examples") {
  const Run all = run({"examples"});
  CHECK(all.code == cli::kOk);
  int lines = 0;
  std::istringstream in(all.out);
  std::string line;
  while (std::getline(in, line)) {
    CHECK(line.rfind("PASS ", 0) == 0);
    ++lines;
  }
  CHECK(lines >= 15);
  const Run ladder = run({"examples", "--filter", "ladder"});
  CHECK(ladder.code == cli::kOk);
  std::istringstream lin(ladder.out);
  while (std::getline(lin, line)) CHECK(line.find("ladder") != std::string::npos);
  CHECK(run({"examples", "--filter", "ladder", "--inject-failure"}).code == cli::kDisagreement);
  CHECK(run({"examples", "--filter", "zzz"}).code == cli::kInputError);
}
