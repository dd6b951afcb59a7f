// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "strata/commutant.hpp"
#include "strata/factory.hpp"
#include "strata/formulas.hpp"
#include "strata/report.hpp"
#include "strata/sweep.hpp"
#include "strata/tangent_oracle.hpp"

#ifndef STRATA_GOLDEN_DIR
#error "STRATA_GOLDEN_DIR must point at tests/golden"
#endif

using namespace strata;

namespace {

constexpr double kGap = 1e4;

// Collects the first few failure messages of one criterion.
struct Outcome {
  long checks = 0;
  long failures = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  std::vector<std::string> messages;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < 5) messages.push_back(what);
  }
  void gap(double g) { min_gap = std::min(min_gap, g); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string describe(const StratumSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, MultiplicityProfile>) {
          std::string out = "[";
          for (int k : s.parts()) out += std::to_string(k) + " ";
          return out + "]";
        } else if constexpr (std::is_same_v<T, JordanStructure>) {
          std::string out = "{";
          for (const auto& g : s.all_blocks()) {
            out += "(";
            for (int k : g) out += std::to_string(k) + " ";
            out += ")";
          }
          return out + "}";
        } else {
          return std::to_string(s.rows()) + "x" + std::to_string(s.cols()) + " r" +
                 std::to_string(s.rank());
        }
      },
      spec);
}

// Runs the tangent oracle with 5 trials and records the outcome.
void check_tangent(Outcome& out, MatrixClass cls, const StratumSpec& spec, Eigenvalues ev,
                   long expected, std::uint64_t seed) {
  RankSettings settings;
  settings.gap_requirement = kGap;
  const Verdict v = verify_class(cls, spec, 5, seed, ev, settings);
  for (const auto& t : v.trials) out.gap(t.gap_ratio);
  out.expect(v.predicted == expected && v.status == VerdictStatus::Pass,
             std::string(class_name(cls)) + " " + describe(spec) + ": predicted " +
                 std::to_string(v.predicted) + ", expected " + std::to_string(expected) + ", " +
                 std::string(status_name(v.status)) + " " + v.detail);
}

long sum_sq_minus_one(std::span<const int> parts) {
  long s = 0;
  for (int k : parts) s += static_cast<long>(k) * k - 1;
  return s;
}

Outcome criterion_1() {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    Partition parts{2};
    parts.resize(n - 1, 1);
    const auto r = dim_real_symmetric(MultiplicityProfile(parts));
    out.expect(r.codim == 2, "n=" + std::to_string(n) + " codim " + std::to_string(r.codim));
  }
  return out;
}

Outcome criterion_2() {
  Outcome out;
  const MatrixClass classes[] = {MatrixClass::DiagonalizableComplex, MatrixClass::Normal,
                                 MatrixClass::Hermitian, MatrixClass::Unitary,
                                 MatrixClass::RealSymmetric};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& parts : enumerate_partitions(n)) {
      const MultiplicityProfile p(parts);
      for (MatrixClass cls : classes) {
        for (auto ev : {Eigenvalues::Free, Eigenvalues::Fixed}) {
          // Expected integer straight from the closed forms, independent of predicted_rank.
          const long n2 = static_cast<long>(n) * n;
          const long big_i = p.distinct_count();
          long half = 0;
          for (int k : parts) half += static_cast<long>(k) * (k - 1) / 2;
          const long free_params = ev == Eigenvalues::Free ? big_i : 0;
          long expected = 0;
          switch (cls) {
            case MatrixClass::DiagonalizableComplex:
              expected = 2 * (n2 - sum_sq_minus_one(parts) - big_i + free_params);
              break;
            case MatrixClass::Normal:
              expected = n2 + big_i - sum_sq_minus_one(parts) - 2 * big_i + 2 * free_params;
              break;
            case MatrixClass::Hermitian:
            case MatrixClass::Unitary:
              expected = n2 - sum_sq_minus_one(parts) - big_i + free_params;
              break;
            case MatrixClass::RealSymmetric:
              expected = static_cast<long>(n) * (n - 1) / 2 + free_params - half;
              break;
            default:
              break;
          }
          check_tangent(out, cls, p, ev, expected, derive_seed(2, n, parts.size() * 97 + parts[0]));
        }
      }
    }
  }
  return out;
}

Outcome criterion_3() {
  Outcome out;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& js : enumerate_jordan_structures(n, 3)) {
      const long expected = weighted_degree_sum(invariant_degrees(js));
      for (std::uint64_t s = 0; s < 3; ++s) {
        const auto spec = sample_spectrum(js.eigenvalue_count(), SpectrumKind::Complex,
                                          derive_seed(3, n * 1000 + s, out.checks), kJordanMinGap);
        const auto basis = commutant_basis(make_jordan(js, spec));
        out.gap(basis.decision.gap_ratio);
        out.expect(basis.dimension == expected && basis.decision.gap_ratio >= kGap,
                   describe(js) + ": nullity " + std::to_string(basis.dimension) + ", expected " +
                       std::to_string(expected));
        const auto report = verify_toeplitz_structure(js, basis, 1e-8);
        out.expect(report.passed(), describe(js) + ": " + report.describe());
      }
    }
  }
  return out;
}

Outcome criterion_4() {
  Outcome out;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& js : enumerate_jordan_structures(n, n)) {
      const long weighted = weighted_degree_sum(invariant_degrees(js));
      const long expected = 2 * (static_cast<long>(n) * n - weighted + js.eigenvalue_count());
      check_tangent(out, MatrixClass::JordanForm, js, Eigenvalues::Free, expected,
                    derive_seed(4, n, out.checks));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const JordanStructure single(std::vector<Partition>{{n}});
    const JordanStructure scalar({Partition(n, 1)});
    out.expect(dim_jordan(single).stratum_dim == n * n - n + 1, "single block n=" + std::to_string(n));
    out.expect(dim_jordan(scalar).stratum_dim == 1, "scalar n=" + std::to_string(n));
    check_tangent(out, MatrixClass::JordanForm, single, Eigenvalues::Free, 2L * (n * n - n + 1),
                  derive_seed(41, n));
    check_tangent(out, MatrixClass::JordanForm, scalar, Eigenvalues::Free, 2, derive_seed(42, n));
  }
  return out;
}

Outcome criterion_5() {
  Outcome out;
  for (const auto& prof : enumerate_singular_profiles(5, 5)) {
    const int n = prof.rows();
    const int m = prof.cols();
    const int r = prof.rank();
    const long big_j = prof.distinct_count();
    long half = 0;
    for (int k : prof.parts()) half += static_cast<long>(k) * (k - 1) / 2;
    const long pair_dim = half + static_cast<long>(n - r) * (n - r - 1) / 2 +
                          static_cast<long>(m - r) * (m - r - 1) / 2;
    const long stratum = static_cast<long>(n + m - r) * r - r - half + big_j;
    const std::uint64_t seed = derive_seed(5, n * 100 + m * 10 + r, out.checks);

    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(n, m);
    if (r > 0) {
      sigma = make_sigma(prof, sample_spectrum(prof.distinct_count(),
                                               SpectrumKind::PositiveDecreasing, seed));
    }
    const auto qp = solve_qp_pair(sigma, prof);
    out.gap(qp.decision.gap_ratio);
    out.expect(qp.dimension == pair_dim && qp.structure_ok() && qp.decision.gap_ratio >= kGap,
               describe(prof) + ": pair nullity " + std::to_string(qp.dimension) + ", expected " +
                   std::to_string(pair_dim));
    check_tangent(out, MatrixClass::SingularValues, prof, Eigenvalues::Free, stratum, seed);

    if (r > 0 && big_j == r) {
      const long open = static_cast<long>(n + m - r) * r;
      out.expect(dim_singular(prof).stratum_dim == open, describe(prof) + ": open stratum");
      out.expect(stratum == open, describe(prof) + ": open stratum closed form");
    }
  }
  return out;
}

Outcome criterion_6() {
  Outcome out;
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      out.expect(pairwise_min_sum(p) == weighted_degree_sum(p), "n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome criterion_7() {
  Outcome out;
  const std::string dir = STRATA_GOLDEN_DIR;
  out.expect(table_to_text(1, table1(), false) == read_file(dir + "/table1.txt"),
             "symbolic table 1 differs from golden");
  out.expect(table_to_text(2, table2(), false) == read_file(dir + "/table2.txt"),
             "symbolic table 2 differs from golden");

  // Hand arithmetic at n = 3, m = 4, r = 2.
  const auto t1 = table1(Table1Params{3, 4, 2});
  const long t1_real[] = {18, 18, 16, 18, 12, 9, 9, 12, 6, 6, 3, 3, 20};
  for (std::size_t i = 0; i < 13; ++i) {
    out.expect(t1[i].real_dim == t1_real[i], "table 1 row " + std::to_string(i + 1));
  }
  Table2Params params;
  params.eigen = MultiplicityProfile({2, 1});
  params.singular = SingularProfile(3, 4, {2});
  params.jordan = JordanStructure({{2, 1}});
  const auto t2 = table2(params);
  const long t2_real[] = {12, 8, 6, 6, 4, 8, 10, 8};
  for (std::size_t i = 0; i < 8; ++i) {
    out.expect(t2[i].real_dim == t2_real[i], "table 2 row " + std::to_string(i + 1));
  }
  out.expect(table_to_text(1, t1, true) == read_file(dir + "/table1_n3.txt"),
             "numeric table 1 differs from golden");
  out.expect(table_to_text(2, t2, true) == read_file(dir + "/table2_n3.txt"),
             "numeric table 2 differs from golden");
  return out;
}

Outcome criterion_8() {
  Outcome out;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& parts : enumerate_partitions(n)) {
      const MultiplicityProfile p(parts);
      const long expected = sum_sq_minus_one(parts);
      out.expect(dim_hermitian(p).codim == expected && dim_unitary(p).codim == expected &&
                     dim_diagonalizable(p).codim == expected,
                 "n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome criterion_9() {
  Outcome out;
  RunConfig config;
  config.seed = 7;
  config.max_n = 4;
  config.max_m = 4;
  const auto cases = build_sweep(parse_scope("all"), config);
  const std::string first = sweep_to_json(run_sweep(cases, config), config, "all").dump(2);
  const std::string second =
      sweep_to_json(run_sweep(build_sweep(parse_scope("all"), config), config), config, "all")
          .dump(2);
  const std::string serial = sweep_to_json(run_sweep_serial(cases, config), config, "all").dump(2);
  out.expect(first == second, "two parallel runs differ");
  out.expect(first == serial, "parallel and serial runs differ");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"real-symmetric double eigenvalue has codimension 2", criterion_1},
      {"eigenvalue classes: oracle rank equals formula, n <= 6, 5 trials", criterion_2},
      {"jordan commutant nullity and block pattern, n <= 8, p <= 3", criterion_3},
      {"jordan stratum dimension, n <= 6, single-block and scalar cases", criterion_4},
      {"singular-value strata and orthogonal pairs, n, m <= 5", criterion_5},
      {"pairwise-min sum equals weighted degree sum, n <= 12", criterion_6},
      {"tables match goldens and hand arithmetic", criterion_7},
      {"hermitian, unitary, diagonalizable codimensions agree, n <= 8", criterion_8},
      {"verify all --max-n 4 --seed 7 is deterministic", criterion_9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.failures == 0 && o.checks > 0;
    failed += !ok;
    std::printf("criterion %zu %s: %s (%ld checks", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.checks);
    if (std::isfinite(o.min_gap)) std::printf(", min gap %.3g", o.min_gap);
    std::printf(", %.2fs)\n", seconds);
    for (const auto& m : o.messages) std::printf("    %s\n", m.c_str());
  }
  return failed == 0 ? 0 : 1;
}
