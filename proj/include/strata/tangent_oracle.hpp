#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "strata/formulas.hpp"
#include "strata/linalg.hpp"
#include "strata/profiles.hpp"

namespace strata {

using StratumSpec = std::variant<MultiplicityProfile, JordanStructure, SingularProfile>;

/// Throws std::invalid_argument if the spec type does not fit the class.
void check_spec_matches(MatrixClass cls, const StratumSpec& spec);

/// Formula prediction for the real rank of the class differential: the real
/// stratum dimension.
long predicted_rank(MatrixClass cls, const StratumSpec& spec, Eigenvalues ev);

/// Numerical rank of one parametrization differential at one base point.
struct RankProbe {
  MatrixClass cls;
  int parameter_dim = 0;  // columns
  int ambient_dim = 0;    // rows, real coordinates
  Eigen::MatrixXcd base_point;  // Lambda, J, or Sigma in the identity frame
  Eigen::MatrixXd differential;
  Eigen::VectorXd singular_values;
  double tolerance = 0.0;
  int rank = 0;
  double gap_ratio = 0.0;
  bool conclusive = true;
};

/// Spectrum sampling gap for the Jordan base points. Wider than the default so
/// the separation of distinct Jordan blocks stays far above the rank threshold.
inline constexpr double kJordanMinGap = 1.0;

/// Builds the differential of the class parametrization at a generic base
/// point drawn from base_seed, in the frame where the outer transform is the
/// identity, and decides its rank. Throws InconclusiveRank.
RankProbe assemble_differential(MatrixClass cls, const StratumSpec& spec, std::uint64_t base_seed,
                                Eigenvalues ev = Eigenvalues::Free,
                                const RankSettings& settings = {});

/// Same differential built column by column on one thread; reference for the
/// OpenMP assembly. Returns the matrix only.
Eigen::MatrixXd assemble_differential_serial(MatrixClass cls, const StratumSpec& spec,
                                             std::uint64_t base_seed,
                                             Eigenvalues ev = Eigenvalues::Free);
Eigen::MatrixXd assemble_differential_matrix(MatrixClass cls, const StratumSpec& spec,
                                             std::uint64_t base_seed,
                                             Eigenvalues ev = Eigenvalues::Free);

/// Outer transforms for a differential computed away from the identity frame.
/// `left` is T, U, or O; `right` is V for singular-value strata and ignored otherwise.
struct Frame {
  Eigen::MatrixXcd left;
  Eigen::MatrixXcd right;
};

/// Differential of the parametrization at the base point conjugated by `frame`,
/// with transform directions taken at the frame itself.
Eigen::MatrixXd framed_differential(MatrixClass cls, const StratumSpec& spec,
                                    std::uint64_t base_seed, Eigenvalues ev, const Frame& frame);

enum class VerdictStatus { Pass, Fail, Inconclusive };

std::string_view status_name(VerdictStatus status);

struct TrialOutcome {
  std::uint64_t seed;
  long observed;  // -1 when inconclusive
  double gap_ratio;
  bool conclusive;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Pass;
  long predicted = 0;
  std::vector<TrialOutcome> trials;
  std::string detail;
};

/// Runs `trials` probes at independent base points. Pass iff every probe is
/// conclusive and matches predicted_rank (+ predicted_offset, used for fault
/// injection). Any inconclusive probe makes the verdict Inconclusive.
Verdict verify_class(MatrixClass cls, const StratumSpec& spec, int trials, std::uint64_t seed,
                     Eigenvalues ev = Eigenvalues::Free, const RankSettings& settings = {},
                     long predicted_offset = 0);

/// Compares the identity-frame rank with the rank at A = T M T^{-1} (or
/// U Sigma V^T) for a random transform of the class's kind. General transforms
/// are drawn with condition <= condition_cap and the tolerance is scaled by the
/// squared condition number.
Verdict conjugation_consistency(MatrixClass cls, const StratumSpec& spec, std::uint64_t seed,
                                const RankSettings& settings = {}, double condition_cap = 1e3);

}  // namespace strata
