// Command-line front end: dimension queries, verification sweeps, and table output.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "strata/formulas.hpp"
#include "strata/grammar.hpp"
#include "strata/report.hpp"
#include "strata/sweep.hpp"

namespace {

constexpr int kUsageError = 64;

using strata::OutputFormat;

strata::DimensionQuery run_dim(const std::string& class_text, const std::string& spec_text) {
  const strata::MatrixClass cls = strata::parse_class(class_text);
  using strata::Eigenvalues;
  switch (cls) {
    case strata::MatrixClass::JordanForm: {
      const auto js = strata::parse_jordan(spec_text);
      return {class_text, strata::format_jordan(js), js.order(),
              strata::dim_jordan(js, Eigenvalues::Free), strata::dim_jordan(js, Eigenvalues::Fixed)};
    }
    case strata::MatrixClass::SingularValues: {
      const auto sp = strata::parse_singular(spec_text);
      return {class_text, strata::format_singular(sp), sp.rows(),
              strata::dim_singular(sp, Eigenvalues::Free),
              strata::dim_singular(sp, Eigenvalues::Fixed)};
    }
    default: {
      const auto p = strata::parse_profile(spec_text);
      return {class_text, strata::format_profile(p), p.order(),
              strata::dimension(cls, p, Eigenvalues::Free),
              strata::dimension(cls, p, Eigenvalues::Fixed)};
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions of matrix strata with prescribed eigenvalue, Jordan, or singular-value "
               "multiplicities, with numerical verification"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text},
                                                    {"json", OutputFormat::Json}};

  // dim
  auto* dim = app.add_subcommand("dim", "Dimension and codimension of one stratum");
  std::string dim_class;
  std::string dim_spec;
  OutputFormat dim_format = OutputFormat::Text;
  dim->add_option("class", dim_class,
                  "diagonalizable | normal | hermitian | skew-hermitian | unitary | "
                  "real-symmetric | jordan | singular")
      ->required();
  dim->add_option("profile", dim_spec,
                  "multiplicities '2,1,1'; jordan 'a:3,1; b:2'; singular '3x4:2,1'")
      ->required();
  dim->add_option("--format", dim_format)->transform(CLI::CheckedTransformer(formats));

  // verify
  auto* verify = app.add_subcommand("verify", "Check formulas against the numerical oracles");
  std::string scope;
  strata::RunConfig config;
  std::optional<int> max_m;
  std::string fault;
  verify->add_option("scope", scope, "all, or a class name")->required();
  verify->add_option("--seed", config.seed, "Base seed");
  verify->add_option("--tolerance", config.rank.tolerance, "Relative rank tolerance, in (0, 1e-2)");
  verify->add_option("--gap", config.rank.gap_requirement, "Required singular-value gap ratio");
  verify->add_option("--trials", config.trials, "Random base points per case");
  verify->add_option("--max-n", config.max_n, "Largest order n in the sweep");
  verify->add_option("--max-m", max_m, "Largest column count for singular-value strata");
  verify->add_option("--format", config.format)->transform(CLI::CheckedTransformer(formats));
  verify->add_flag("--serial", "Run the sweep on one thread");
  verify->add_option("--inject-fault", fault)->group("");

  // table
  auto* table = app.add_subcommand("table", "Print a dimension table");
  int which = 1;
  std::optional<int> tn;
  std::optional<int> tm;
  std::optional<int> tr;
  std::string t_profile;
  std::string t_jordan;
  std::string t_svd;
  OutputFormat table_format = OutputFormat::Text;
  table->add_option("which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  table->add_option("--n", tn, "Order n");
  table->add_option("--m", tm, "Column count m (table 1, last row)");
  table->add_option("--r", tr, "Rank r (table 1, last row)");
  table->add_option("--profile", t_profile, "Eigenvalue multiplicities (table 2, rows 1-5)");
  table->add_option("--jordan", t_jordan, "Jordan structure (table 2, row 7)");
  table->add_option("--svd", t_svd, "Singular-value profile 'n x m : k,...' (table 2, rows 6, 8)");
  table->add_option("--format", table_format)->transform(CLI::CheckedTransformer(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*dim) {
      const auto query = run_dim(dim_class, dim_spec);
      if (dim_format == OutputFormat::Json) {
        std::cout << strata::dimension_to_json(query).dump(2) << '\n';
      } else {
        std::cout << strata::dimension_to_text(query);
      }
      return 0;
    }

    if (*verify) {
      config.max_m = max_m.value_or(config.max_n);
      if (!fault.empty()) config.fault_class = strata::parse_class(fault);
      const auto classes = strata::parse_scope(scope);
      const auto cases = strata::build_sweep(classes, config);
      const auto results = verify->count("--serial") ? strata::run_sweep_serial(cases, config)
                                                     : strata::run_sweep(cases, config);
      if (config.format == OutputFormat::Json) {
        std::cout << strata::sweep_to_json(results, config, scope).dump(2) << '\n';
      } else {
        std::cout << strata::sweep_to_text(results, config, scope);
      }
      return strata::exit_code(strata::overall_status(results));
    }

    if (*table) {
      const bool numeric = tn || tm || tr || !t_profile.empty() || !t_jordan.empty() ||
                           !t_svd.empty();
      std::vector<strata::TableRow> rows;
      if (which == 1) {
        if (numeric && !tn) throw std::invalid_argument("table 1: numeric mode needs --n");
        if (numeric) {
          const int m = tm.value_or(*tn);
          rows = strata::table1(strata::Table1Params{*tn, m, tr.value_or(std::min(*tn, m))});
        } else {
          rows = strata::table1();
        }
      } else if (numeric) {
        strata::Table2Params params;
        if (!t_profile.empty()) {
          auto p = strata::parse_profile(t_profile);
          if (tn && *tn != p.order()) {
            throw std::invalid_argument("table 2: --n " + std::to_string(*tn) +
                                        " does not match profile order " +
                                        std::to_string(p.order()));
          }
          params.eigen = std::move(p);
        }
        if (!t_jordan.empty()) params.jordan = strata::parse_jordan(t_jordan);
        if (!t_svd.empty()) params.singular = strata::parse_singular(t_svd);
        rows = strata::table2(params);
      } else {
        rows = strata::table2();
      }
      if (table_format == OutputFormat::Json) {
        std::cout << strata::table_to_json(which, rows).dump(2) << '\n';
      } else {
        std::cout << strata::table_to_text(which, rows, numeric);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}
