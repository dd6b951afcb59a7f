#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "strata/formulas.hpp"
#include "strata/sweep.hpp"

namespace strata {

/// {cases: [{case, class, predicted, observed, gap_ratio, verdict}], summary: {...}}.
/// Infinite gap ratios are written as the largest finite double.
nlohmann::json sweep_to_json(const std::vector<CaseResult>& results, const RunConfig& config,
                             const std::string& scope);
std::string sweep_to_text(const std::vector<CaseResult>& results, const RunConfig& config,
                          const std::string& scope);

/// Free and fixed variants of one stratum, as printed by `dim`.
struct DimensionQuery {
  std::string class_label;
  std::string spec_text;
  int order;
  DimensionReport free;
  DimensionReport fixed;
};

nlohmann::json dimension_to_json(const DimensionQuery& query);
std::string dimension_to_text(const DimensionQuery& query);

std::string table_to_text(int which, const std::vector<TableRow>& rows, bool numeric);
nlohmann::json table_to_json(int which, const std::vector<TableRow>& rows);

}  // namespace strata
