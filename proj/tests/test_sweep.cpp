#include "doctest.h"

#include <set>
#include <sstream>

#include "strata/report.hpp"
#include "strata/sweep.hpp"

using namespace strata;

namespace {

RunConfig small_config() {
  RunConfig config;
  config.max_n = 3;
  config.max_m = 3;
  config.trials = 2;
  config.seed = 7;
  return config;
}

}  // namespace

TEST_CASE("run configuration validation") {
  RunConfig config;
  CHECK_NOTHROW(config.validate());
  config.rank.tolerance = 0.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = RunConfig{};
  config.trials = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = RunConfig{};
  config.max_n = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("scopes") {
  CHECK(parse_scope("all").size() == 8);
  CHECK(parse_scope("jordan") == std::vector<MatrixClass>{MatrixClass::JordanForm});
  CHECK_THROWS_AS(parse_scope("everything"), std::invalid_argument);
}

TEST_CASE("sweep cases are named uniquely and seeded by name") {
  const RunConfig config = small_config();
  const auto all = build_sweep(parse_scope("all"), config);
  std::set<std::string> names;
  for (const auto& c : all) names.insert(c.name);
  CHECK(names.size() == all.size());

  const auto herm = build_sweep({MatrixClass::Hermitian}, config);
  REQUIRE_FALSE(herm.empty());
  for (const auto& h : herm) {
    const auto it = std::find_if(all.begin(), all.end(), [&](const SweepCase& c) { return c.name == h.name; });
    REQUIRE(it != all.end());
    CHECK(it->seed == h.seed);
  }
  // Classes appear in argument order, and within a class n does not decrease.
  CHECK(all.front().cls == MatrixClass::DiagonalizableComplex);
  CHECK(all.back().cls == MatrixClass::SingularValues);
}

TEST_CASE("parallel sweep reproduces the serial reference") {
  const RunConfig config = small_config();
  const auto cases = build_sweep(parse_scope("all"), config);
  const auto parallel = run_sweep(cases, config);
  const auto serial = run_sweep_serial(cases, config);
  CHECK(parallel == serial);
  CHECK(overall_status(parallel) == VerdictStatus::Pass);
  CHECK(sweep_to_json(parallel, config, "all") == sweep_to_json(run_sweep(cases, config), config, "all"));
}

TEST_CASE("fault injection fails only the chosen class") {
  RunConfig config = small_config();
  config.fault_class = MatrixClass::Unitary;
  const auto results = run_sweep(build_sweep(parse_scope("all"), config), config);
  for (const auto& r : results) {
    if (r.cls == MatrixClass::Unitary && r.name.find("tangent") != std::string::npos) {
      CHECK(r.verdict == VerdictStatus::Fail);
      CHECK(r.observed + 1 == r.predicted);
    }
    if (r.cls != MatrixClass::Unitary) CHECK(r.verdict == VerdictStatus::Pass);
  }
  CHECK(exit_code(overall_status(results)) == 1);
}

TEST_CASE("status aggregation") {
  auto make = [](VerdictStatus s) { return CaseResult{"c", MatrixClass::Hermitian, 1, 1, 1.0, s, ""}; };
  CHECK(overall_status({}) == VerdictStatus::Pass);
  CHECK(overall_status({make(VerdictStatus::Pass), make(VerdictStatus::Inconclusive)}) ==
        VerdictStatus::Inconclusive);
  CHECK(overall_status({make(VerdictStatus::Inconclusive), make(VerdictStatus::Fail)}) ==
        VerdictStatus::Fail);
  CHECK(exit_code(VerdictStatus::Pass) == 0);
  CHECK(exit_code(VerdictStatus::Fail) == 1);
  CHECK(exit_code(VerdictStatus::Inconclusive) == 2);
}

TEST_CASE("text and json reports carry the same numbers") {
  const RunConfig config = small_config();
  const auto results = run_sweep(build_sweep({MatrixClass::RealSymmetric}, config), config);
  const auto json = sweep_to_json(results, config, "real-symmetric");
  const std::string text = sweep_to_text(results, config, "real-symmetric");

  REQUIRE(json["cases"].size() == results.size());
  std::istringstream lines(text);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line) && i < results.size()) {
    const auto& entry = json["cases"][i++];
    CHECK(line.find(entry["case"].get<std::string>() + ":") != std::string::npos);
    CHECK(line.find("predicted " + std::to_string(entry["predicted"].get<long>())) !=
          std::string::npos);
    CHECK(line.find("observed " + std::to_string(entry["observed"].get<long>())) !=
          std::string::npos);
    CHECK(line.rfind(entry["verdict"].get<std::string>(), 0) == 0);
  }
  const auto& s = json["summary"];
  CHECK(s["total"] == results.size());
  CHECK(s["passed"] == results.size());
  CHECK(text.find("summary: PASS, " + std::to_string(results.size()) + " passed") !=
        std::string::npos);
}

TEST_CASE("dimension reports in both formats") {
  const MultiplicityProfile p({2, 1, 1});
  const DimensionQuery q{"real-symmetric", "2,1,1", 4, dim_real_symmetric(p),
                         dim_real_symmetric(p, Eigenvalues::Fixed)};
  const auto json = dimension_to_json(q);
  CHECK(json["free"]["codim"] == 2);
  CHECK(json["fixed"]["codim"] == 5);
  const std::string text = dimension_to_text(q);
  CHECK(text.find("real codimension 2") != std::string::npos);
  CHECK(text.find("real codimension 5") != std::string::npos);
}
