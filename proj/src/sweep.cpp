#include "strata/sweep.hpp"

#include <algorithm>

#include "strata/commutant.hpp"
#include "strata/factory.hpp"
#include "strata/grammar.hpp"

namespace strata {

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::array kAllClasses{
    MatrixClass::DiagonalizableComplex, MatrixClass::Normal,     MatrixClass::Hermitian,
    MatrixClass::SkewHermitian,         MatrixClass::Unitary,    MatrixClass::RealSymmetric,
    MatrixClass::JordanForm,            MatrixClass::SingularValues,
};

std::string describe_spec(const StratumSpec& spec) {
  if (const auto* p = std::get_if<MultiplicityProfile>(&spec)) return format_profile(*p);
  if (const auto* j = std::get_if<JordanStructure>(&spec)) return format_jordan(*j);
  return format_singular(std::get<SingularProfile>(spec));
}

std::vector<StratumSpec> specs_for(MatrixClass cls, const RunConfig& config) {
  std::vector<StratumSpec> specs;
  if (cls == MatrixClass::JordanForm) {
    for (int n = 1; n <= config.max_n; ++n) {
      for (auto& js : enumerate_jordan_structures(n, n)) specs.emplace_back(std::move(js));
    }
  } else if (cls == MatrixClass::SingularValues) {
    for (auto& p : enumerate_singular_profiles(config.max_n, config.max_m)) {
      specs.emplace_back(std::move(p));
    }
  } else {
    for (int n = 1; n <= config.max_n; ++n) {
      for (auto& part : enumerate_partitions(n)) specs.emplace_back(MultiplicityProfile(std::move(part)));
    }
  }
  return specs;
}

TransformKind stabilizer_kind(MatrixClass cls) {
  switch (canonical_class(cls)) {
    case MatrixClass::DiagonalizableComplex:
      return TransformKind::InvertibleComplex;
    case MatrixClass::RealSymmetric:
      return TransformKind::Orthogonal;
    default:
      return TransformKind::Unitary;
  }
}

SpectrumKind spectrum_kind(MatrixClass cls) {
  switch (canonical_class(cls)) {
    case MatrixClass::Hermitian:
    case MatrixClass::RealSymmetric:
      return SpectrumKind::Real;
    case MatrixClass::Unitary:
      return SpectrumKind::Unimodular;
    default:
      return SpectrumKind::Complex;
  }
}

CaseResult inconclusive(const SweepCase& c, long predicted, const InconclusiveRank& e) {
  return {c.name, c.cls, predicted, -1, e.decision().gap_ratio, VerdictStatus::Inconclusive,
          e.what()};
}

CaseResult run_tangent(const SweepCase& c, const RunConfig& config, long offset) {
  const long predicted = predicted_rank(c.cls, c.spec, c.eigenvalues) + offset;
  try {
    const RankProbe probe = assemble_differential(c.cls, c.spec, c.seed, c.eigenvalues, config.rank);
    const bool match = probe.rank == predicted;
    return {c.name, c.cls, predicted, probe.rank, probe.gap_ratio,
            match ? VerdictStatus::Pass : VerdictStatus::Fail,
            match ? "" : "differential rank differs from formula"};
  } catch (const InconclusiveRank& e) {
    return inconclusive(c, predicted, e);
  }
}

CaseResult run_commutant(const SweepCase& c, const RunConfig& config, long offset) {
  const std::uint64_t spectrum_seed = derive_seed(c.seed, 1);
  if (const auto* js = std::get_if<JordanStructure>(&c.spec)) {
    const long predicted = commutant_structured_dim(*js) + offset;
    try {
      const SpectrumSpec spec = sample_spectrum(js->eigenvalue_count(), SpectrumKind::Complex,
                                                spectrum_seed, kJordanMinGap);
      const CommutantBasis basis = commutant_basis(make_jordan(*js, spec), config.rank);
      const ToeplitzReport pattern = verify_toeplitz_structure(*js, basis);
      const bool match = basis.dimension == predicted;
      std::string detail;
      if (!match) detail = "commutant nullity differs from formula; ";
      if (!pattern.passed()) detail += pattern.describe();
      return {c.name, c.cls, predicted, basis.dimension, basis.decision.gap_ratio,
              match && pattern.passed() ? VerdictStatus::Pass : VerdictStatus::Fail, detail};
    } catch (const InconclusiveRank& e) {
      return inconclusive(c, predicted, e);
    }
  }
  if (const auto* sp = std::get_if<SingularProfile>(&c.spec)) {
    const long predicted = orthogonal_pair_dim(*sp) + offset;
    try {
      Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(sp->rows(), sp->cols());
      if (sp->distinct_count() > 0) {
        sigma = make_sigma(*sp, sample_spectrum(sp->distinct_count(),
                                                SpectrumKind::PositiveDecreasing, spectrum_seed));
      }
      const QpPairResult qp = solve_qp_pair(sigma, *sp, config.rank);
      const bool match = qp.dimension == predicted;
      std::string detail;
      if (!match) detail = "stabilizer nullity differs from formula; ";
      if (!qp.structure_ok()) detail += "null pairs break the block structure";
      return {c.name, c.cls, predicted, qp.dimension, qp.decision.gap_ratio,
              match && qp.structure_ok() ? VerdictStatus::Pass : VerdictStatus::Fail, detail};
    } catch (const InconclusiveRank& e) {
      return inconclusive(c, predicted, e);
    }
  }
  const auto& profile = std::get<MultiplicityProfile>(c.spec);
  const TransformKind kind = stabilizer_kind(c.cls);
  const long predicted = commutant_dim_diagonal(profile, kind) + offset;
  try {
    const SpectrumSpec spec = sample_spectrum(profile.distinct_count(), spectrum_kind(c.cls), spectrum_seed);
    const Eigen::MatrixXcd lambda = make_block_diagonal_lambda(profile, spec);
    const Nullity found = group_commutant(lambda, kind, config.rank);
    const bool match = found.dimension == predicted;
    return {c.name, c.cls, predicted, found.dimension, found.decision.gap_ratio,
            match ? VerdictStatus::Pass : VerdictStatus::Fail,
            match ? "" : "stabilizer nullity differs from formula"};
  } catch (const InconclusiveRank& e) {
    return inconclusive(c, predicted, e);
  }
}

}  // namespace

void RunConfig::validate() const {
  rank.validate();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (max_n < 1 || max_m < 1) throw std::invalid_argument("sweep bounds must be >= 1");
}

std::vector<MatrixClass> parse_scope(std::string_view scope) {
  if (scope == "all") return {kAllClasses.begin(), kAllClasses.end()};
  return {parse_class(scope)};
}

std::vector<SweepCase> build_sweep(const std::vector<MatrixClass>& classes, const RunConfig& config) {
  config.validate();
  std::vector<SweepCase> cases;
  for (MatrixClass cls : classes) {
    const std::string cls_name(class_name(cls));
    for (const auto& spec : specs_for(cls, config)) {
      const std::string spec_text = describe_spec(spec);
      for (Eigenvalues ev : {Eigenvalues::Fixed, Eigenvalues::Free}) {
        const char* ev_name = ev == Eigenvalues::Fixed ? "fixed" : "free";
        for (int t = 0; t < config.trials; ++t) {
          std::string name = cls_name + " tangent " + ev_name + " [" + spec_text + "] trial " +
                             std::to_string(t);
          const std::uint64_t seed = derive_seed(config.seed, fnv1a(name));
          cases.push_back({std::move(name), cls, spec, CheckKind::Tangent, ev, t, seed});
        }
      }
      for (int t = 0; t < config.trials; ++t) {
        std::string name = cls_name + " stabilizer [" + spec_text + "] trial " + std::to_string(t);
        const std::uint64_t seed = derive_seed(config.seed, fnv1a(name));
        cases.push_back({std::move(name), cls, spec, CheckKind::Commutant, Eigenvalues::Fixed, t, seed});
      }
    }
  }
  return cases;
}

CaseResult run_case(const SweepCase& c, const RunConfig& config) {
  const long offset = config.fault_class && *config.fault_class == c.cls ? 1 : 0;
  return c.check == CheckKind::Tangent ? run_tangent(c, config, offset)
                                       : run_commutant(c, config, offset);
}

std::vector<CaseResult> run_sweep(const std::vector<SweepCase>& cases, const RunConfig& config) {
  std::vector<CaseResult> results(cases.size());
  const auto count = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) results[i] = run_case(cases[i], config);
  return results;
}

std::vector<CaseResult> run_sweep_serial(const std::vector<SweepCase>& cases,
                                         const RunConfig& config) {
  std::vector<CaseResult> results;
  results.reserve(cases.size());
  for (const auto& c : cases) results.push_back(run_case(c, config));
  return results;
}

VerdictStatus overall_status(const std::vector<CaseResult>& results) {
  bool inconclusive = false;
  for (const auto& r : results) {
    if (r.verdict == VerdictStatus::Fail) return VerdictStatus::Fail;
    if (r.verdict == VerdictStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? VerdictStatus::Inconclusive : VerdictStatus::Pass;
}

int exit_code(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass:
      return 0;
    case VerdictStatus::Fail:
      return 1;
    case VerdictStatus::Inconclusive:
      return 2;
  }
  return 1;
}

}  // namespace strata
