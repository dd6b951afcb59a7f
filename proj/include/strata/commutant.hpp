#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "strata/formulas.hpp"
#include "strata/linalg.hpp"
#include "strata/profiles.hpp"

namespace strata {

/// The map S -> SJ - JS on column-major vec(S), i.e. J^T (x) I - I (x) J.
/// Columns are filled in parallel when OpenMP is enabled.
Eigen::MatrixXcd commutation_operator(const Eigen::MatrixXcd& j);
/// Single-threaded reference for commutation_operator.
Eigen::MatrixXcd commutation_operator_serial(const Eigen::MatrixXcd& j);

struct CommutantBasis {
  Eigen::MatrixXcd operator_matrix;
  /// Orthonormal (in the Frobenius inner product) basis of {S : SJ = JS}.
  std::vector<Eigen::MatrixXcd> null_basis;
  int dimension = 0;
  double tolerance_used = 0.0;
  RankDecision decision;
};

/// Null space of the commutation operator via a full SVD.
/// Throws InconclusiveRank when the rank decision is ambiguous.
CommutantBasis commutant_basis(const Eigen::MatrixXcd& j, const RankSettings& settings = {});

/// Complex dimension of the commutant of a complex J. Throws InconclusiveRank.
int commutant_dimension(const Eigen::MatrixXcd& j, const RankSettings& settings = {});
/// Real dimension of the commutant of a real J (same integer as over C).
int commutant_dimension(const Eigen::MatrixXd& j, const RankSettings& settings = {});

struct Nullity {
  int dimension = 0;
  RankDecision decision;
};

/// Dimension of the transform group commuting with a diagonal Lambda, counted
/// at the tangent level: complex nullity for InvertibleComplex, real nullity
/// over skew-Hermitian X for Unitary, over real skew-symmetric X for
/// Orthogonal (Lambda must then be real). Throws InconclusiveRank.
Nullity group_commutant(const Eigen::MatrixXcd& lambda, TransformKind kind,
                        const RankSettings& settings = {});
int group_commutant_dimension(const Eigen::MatrixXcd& lambda, TransformKind kind,
                              const RankSettings& settings = {});

/// Sum of (2j - 1) m_j over the invariant-polynomial degrees.
long commutant_structured_dim(const JordanStructure& js);

/// Allowed support of block S^{ij} (k_i x k_j) of a Jordan commutant element.
struct ToeplitzPattern {
  int rows;  // k_i
  int cols;  // k_j
  bool same_eigenvalue;

  /// 0-based (s, t); zero when eigenvalues differ or t - s < [k_j - k_i]_+.
  bool forced_zero(int s, int t) const;
  /// Diagonals t - s that are not forced to zero.
  int free_diagonals() const;
  /// min(k_i, k_j) for equal eigenvalues, else 0.
  int free_count() const;
};

struct StructureViolation {
  std::string condition;  // "cross-eigenvalue", "toeplitz", or "zero-pattern"
  int block_i;
  int block_j;
  int s;  // 0-based within the block
  int t;
  double magnitude;
};

struct ToeplitzReport {
  double cross_eigenvalue_max = 0.0;
  double toeplitz_max = 0.0;
  double zero_pattern_max = 0.0;
  double tolerance = 0.0;
  std::optional<StructureViolation> worst;

  bool passed() const;
  std::string describe() const;
};

/// Checks every basis element against the block pattern of the Jordan
/// commutant: blocks between different eigenvalues vanish, same-eigenvalue
/// blocks are constant along diagonals and zero where t - s < [k_j - k_i]_+.
/// Because the conditions are linear, checking a basis checks its span.
ToeplitzReport verify_toeplitz_structure(const JordanStructure& js, const CommutantBasis& basis,
                                         double tolerance = 1e-8);

struct QpPairResult {
  /// Nullity of (X, Y) -> X Sigma - Sigma Y over skew-symmetric pairs.
  int dimension = 0;
  long predicted = 0;
  RankDecision decision;
  /// Largest entry of any null pair outside the block-diagonal pattern.
  double off_block_max = 0.0;
  /// Largest |X_j - Y_j| over the coupled blocks j <= J.
  double coupling_max = 0.0;
  bool structure_ok(double tolerance = 1e-8) const {
    return off_block_max <= tolerance && coupling_max <= tolerance;
  }
};

/// Tangent-level solution of Q Sigma = Sigma P for orthogonal Q, P at (I, I).
/// Throws InconclusiveRank.
QpPairResult solve_qp_pair(const Eigen::MatrixXd& sigma, const SingularProfile& profile,
                           const RankSettings& settings = {});

}  // namespace strata
