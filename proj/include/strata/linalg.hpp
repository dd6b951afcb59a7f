#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace strata {

/// Rank-decision parameters shared by the commutant and tangent oracles.
struct RankSettings {
  /// Singular values <= tolerance * sigma_max count as zero. Must lie in (0, 1e-2).
  double tolerance = 1e-8;
  /// Smallest kept / largest dropped must reach this for a conclusive decision.
  double gap_requirement = 1e4;
  /// Any singular value within [threshold / band, threshold * band] is undecidable.
  double indecision_band = 10.0;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct RankDecision {
  int rank = 0;
  double threshold = 0.0;
  /// Smallest kept over largest dropped; +inf when either side is empty.
  double gap_ratio = 0.0;
  bool conclusive = true;
  std::string reason;  // why the decision is inconclusive, empty otherwise
  Eigen::VectorXd singular_values;  // decreasing
};

/// Thrown when a rank decision falls in the indecision band or misses the gap
/// requirement. Carries the spectrum so callers can report it.
class InconclusiveRank : public std::runtime_error {
 public:
  explicit InconclusiveRank(RankDecision decision);
  const RankDecision& decision() const { return decision_; }

 private:
  RankDecision decision_;
};

/// Applies the threshold rule to a decreasing list of singular values.
RankDecision decide_rank(const Eigen::VectorXd& singular_values, const RankSettings& settings);

RankDecision numerical_rank(const Eigen::MatrixXd& m, const RankSettings& settings);
RankDecision numerical_rank(const Eigen::MatrixXcd& m, const RankSettings& settings);

/// Column-major stacking of real parts, then imaginary parts (2 * rows * cols entries).
Eigen::VectorXd realify(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd unrealify(const Eigen::VectorXd& v, int rows, int cols);

/// Real basis of the n^2-dimensional space of skew-Hermitian n x n matrices.
std::vector<Eigen::MatrixXcd> skew_hermitian_basis(int n);
/// Basis E_st - E_ts (s < t) of the real skew-symmetric n x n matrices.
std::vector<Eigen::MatrixXd> skew_symmetric_basis(int n);

}  // namespace strata
