#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strata/formulas.hpp"
#include "strata/linalg.hpp"
#include "strata/tangent_oracle.hpp"

namespace strata {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::uint64_t seed = 0;
  RankSettings rank;
  int trials = 5;
  int max_n = 4;
  int max_m = 4;
  OutputFormat format = OutputFormat::Text;
  /// Adds +1 to every prediction for this class so the FAIL path can be exercised.
  std::optional<MatrixClass> fault_class;

  /// Throws std::invalid_argument: tolerance in (0, 1e-2), trials >= 1, bounds >= 1.
  void validate() const;
};

enum class CheckKind {
  Tangent,    // rank of the parametrization differential
  Commutant,  // nullity of the stabilizer equations (SJ = JS, Q Sigma = Sigma P)
};

struct SweepCase {
  std::string name;
  MatrixClass cls;
  StratumSpec spec;
  CheckKind check;
  Eigenvalues eigenvalues;
  int trial;
  std::uint64_t seed;
};

struct CaseResult {
  std::string name;
  MatrixClass cls;
  long predicted;
  long observed;  // -1 when the rank decision was inconclusive
  double gap_ratio;
  VerdictStatus verdict;
  std::string detail;

  bool operator==(const CaseResult&) const = default;
};

/// "all" expands to every class; otherwise a single class name.
std::vector<MatrixClass> parse_scope(std::string_view scope);

/// Cases for the given classes, in a fixed order: classes in argument order,
/// then increasing n (and m), enumeration order of the profiles, fixed before
/// free, trials innermost. Each case seed is derived from the run seed and the
/// case name, so a case's numbers do not depend on which other cases run.
std::vector<SweepCase> build_sweep(const std::vector<MatrixClass>& classes, const RunConfig& config);

CaseResult run_case(const SweepCase& c, const RunConfig& config);

/// Runs the cases across OpenMP threads. Results are stored by case index,
/// so output order never depends on scheduling.
std::vector<CaseResult> run_sweep(const std::vector<SweepCase>& cases, const RunConfig& config);
/// One-thread reference for run_sweep.
std::vector<CaseResult> run_sweep_serial(const std::vector<SweepCase>& cases,
                                         const RunConfig& config);

/// Fail dominates Inconclusive, which dominates Pass.
VerdictStatus overall_status(const std::vector<CaseResult>& results);
/// 0 PASS, 1 FAIL, 2 INCONCLUSIVE.
int exit_code(VerdictStatus status);

}  // namespace strata
