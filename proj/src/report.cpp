#include "strata/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace strata {

namespace {

double finite_gap(double gap) {
  return std::isinf(gap) ? std::numeric_limits<double>::max() : gap;
}

nlohmann::json summary_json(const std::vector<CaseResult>& results, const RunConfig& config,
                            const std::string& scope) {
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& r : results) {
    switch (r.verdict) {
      case VerdictStatus::Pass:
        ++passed;
        break;
      case VerdictStatus::Fail:
        ++failed;
        break;
      case VerdictStatus::Inconclusive:
        ++inconclusive;
        break;
    }
    min_gap = std::min(min_gap, r.gap_ratio);
  }
  return {
      {"scope", scope},
      {"total", results.size()},
      {"passed", passed},
      {"failed", failed},
      {"inconclusive", inconclusive},
      {"min_gap_ratio", finite_gap(min_gap)},
      {"verdict", status_name(overall_status(results))},
      {"seed", config.seed},
      {"tolerance", config.rank.tolerance},
      {"gap_requirement", config.rank.gap_requirement},
      {"trials", config.trials},
      {"max_n", config.max_n},
      {"max_m", config.max_m},
  };
}

nlohmann::json terms_json(const DimensionReport& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : r.terms) terms.push_back({{"label", t.label}, {"value", t.value}});
  return terms;
}

nlohmann::json variant_json(const DimensionReport& r) {
  nlohmann::json j{
      {"ambient_dim", r.ambient_dim},
      {"stratum_dim", r.stratum_dim},
      {"codim", r.codim},
      {"real_ambient_dim", r.real_ambient_dim()},
      {"real_stratum_dim", r.real_stratum_dim()},
      {"real_codim", r.real_codim()},
      {"terms", terms_json(r)},
  };
  if (r.codim_in_rank_r) j["codim_in_rank_r"] = *r.codim_in_rank_r;
  return j;
}

std::string terms_text(const DimensionReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    if (i) out += ", ";
    out += r.terms[i].label + " " + std::to_string(r.terms[i].value);
  }
  return out;
}

std::string cell(const std::optional<long>& v) { return v ? std::to_string(*v) : "---"; }

}  // namespace

nlohmann::json sweep_to_json(const std::vector<CaseResult>& results, const RunConfig& config,
                             const std::string& scope) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& r : results) {
    cases.push_back({
        {"case", r.name},
        {"class", class_name(r.cls)},
        {"predicted", r.predicted},
        {"observed", r.observed},
        {"gap_ratio", finite_gap(r.gap_ratio)},
        {"verdict", status_name(r.verdict)},
    });
  }
  return {{"cases", std::move(cases)}, {"summary", summary_json(results, config, scope)}};
}

std::string sweep_to_text(const std::vector<CaseResult>& results, const RunConfig& config,
                          const std::string& scope) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << std::left << std::setw(13) << status_name(r.verdict) << r.name << ": predicted "
        << r.predicted << ", observed " << r.observed << ", gap " << std::setprecision(3)
        << finite_gap(r.gap_ratio);
    if (!r.detail.empty() && r.verdict != VerdictStatus::Pass) out << " (" << r.detail << ")";
    out << '\n';
  }
  const nlohmann::json s = summary_json(results, config, scope);
  out << "summary: " << s["verdict"].get<std::string>() << ", " << s["passed"] << " passed, "
      << s["failed"] << " failed, " << s["inconclusive"] << " inconclusive of " << s["total"]
      << " cases (scope " << scope << ", seed " << config.seed << ")\n";
  return out.str();
}

nlohmann::json dimension_to_json(const DimensionQuery& q) {
  return {
      {"class", q.class_label},
      {"profile", q.spec_text},
      {"n", q.order},
      {"field", q.free.field == FieldKind::Complex ? "complex" : "real"},
      {"ambient", q.free.ambient},
      {"free", variant_json(q.free)},
      {"fixed", variant_json(q.fixed)},
  };
}

std::string dimension_to_text(const DimensionQuery& q) {
  const bool complex = q.free.field == FieldKind::Complex;
  const char* field = complex ? "complex" : "real";
  std::ostringstream out;
  out << "class: " << q.class_label << '\n'
      << "profile: " << q.spec_text << " (n = " << q.order << ")\n"
      << "ambient: " << q.free.ambient << ", " << field << " dimension " << q.free.ambient_dim
      << '\n';
  auto variant = [&](const char* name, const DimensionReport& r) {
    out << name << ": " << field << " dimension " << r.stratum_dim << ", " << field
        << " codimension " << r.codim;
    if (complex) out << " (real " << r.real_stratum_dim() << " / " << r.real_codim() << ")";
    if (r.codim_in_rank_r) out << ", codimension in rank-r matrices " << *r.codim_in_rank_r;
    out << '\n' << "  terms: " << terms_text(r) << '\n';
  };
  variant("free", q.free);
  variant("fixed", q.fixed);
  return out.str();
}

std::string table_to_text(int which, const std::vector<TableRow>& rows, bool numeric) {
  const std::string set_header =
      which == 1 ? "Set of matrices in C^{nn}" : "Set of matrices in C^{nn}, mult k_1,...,k_I";
  const std::string complex_header = "Complex dimension";
  const std::string real_header = "Real dimension";

  std::vector<std::array<std::string, 4>> body;
  for (const auto& r : rows) {
    body.push_back({std::to_string(r.index) + ".", r.set,
                    numeric ? cell(r.complex_dim) : r.complex_formula,
                    numeric ? cell(r.real_dim) : r.real_formula});
  }
  std::array<std::size_t, 4> width{3, set_header.size(), complex_header.size(), real_header.size()};
  for (const auto& line : body) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], line[c].size());
  }

  std::ostringstream out;
  auto emit = [&](const std::array<std::string, 4>& line) {
    std::string text;
    for (std::size_t c = 0; c < 4; ++c) {
      text += line[c];
      if (c + 1 < 4) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  out << "Table " << which << '\n';
  emit({"#", set_header, complex_header, real_header});
  emit({std::string(width[0], '-'), std::string(width[1], '-'), std::string(width[2], '-'),
        std::string(width[3], '-')});
  for (const auto& line : body) emit(line);
  return out.str();
}

nlohmann::json table_to_json(int which, const std::vector<TableRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"index", r.index},
                       {"set", r.set},
                       {"complex_formula", r.complex_formula},
                       {"real_formula", r.real_formula}};
    row["complex_dim"] = r.complex_dim ? nlohmann::json(*r.complex_dim) : nlohmann::json(nullptr);
    row["real_dim"] = r.real_dim ? nlohmann::json(*r.real_dim) : nlohmann::json(nullptr);
    out.push_back(std::move(row));
  }
  return {{"table", which}, {"rows", std::move(out)}};
}

}  // namespace strata
