#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strata/profiles.hpp"

namespace strata {

enum class MatrixClass {
  DiagonalizableComplex,
  Normal,
  Hermitian,
  SkewHermitian,  // counts identical to Hermitian via A -> iA
  Unitary,
  RealSymmetric,
  JordanForm,
  SingularValues,  // real n x m matrices
};

enum class FieldKind { Real, Complex };

/// Whether the distinct eigenvalues (or singular values) may vary or are pinned.
enum class Eigenvalues { Free, Fixed };

/// Group whose elements commute with a diagonal matrix in the counting argument.
enum class TransformKind { InvertibleComplex, Unitary, Orthogonal };

std::string_view class_name(MatrixClass cls);
/// Accepts the names produced by class_name. Throws std::invalid_argument.
MatrixClass parse_class(std::string_view name);
/// SkewHermitian resolves to Hermitian; every other class maps to itself.
MatrixClass canonical_class(MatrixClass cls);
FieldKind field_of(MatrixClass cls);

struct Term {
  std::string label;
  long value;
  bool operator==(const Term&) const = default;
};

/// Dimension of one stratum. All dimensions are counted over `field`;
/// the real_* accessors double complex counts.
struct DimensionReport {
  MatrixClass cls;
  FieldKind field;
  Eigenvalues eigenvalues;
  std::string ambient;  // human-readable name of the enclosing space
  long ambient_dim;
  long stratum_dim;
  long codim;
  /// Signed contributions; their sum is stratum_dim.
  std::vector<Term> terms;
  /// Singular-value strata only: codimension inside the rank-r matrices.
  std::optional<long> codim_in_rank_r;

  long real_ambient_dim() const { return field == FieldKind::Complex ? 2 * ambient_dim : ambient_dim; }
  long real_stratum_dim() const { return field == FieldKind::Complex ? 2 * stratum_dim : stratum_dim; }
  long real_codim() const { return field == FieldKind::Complex ? 2 * codim : codim; }
  /// The term counting eigenvalue (or singular value) parameters; 0 when fixed.
  long eigenvalue_term() const;
};

/// Dimension of the group of transforms commuting with a diagonal matrix of the
/// given multiplicities: complex dim for InvertibleComplex, real dim otherwise.
long commutant_dim_diagonal(const MultiplicityProfile& profile, TransformKind kind);

/// Sum over (2j - 1) m_j, the complex dimension of the commutant of a Jordan matrix.
long jordan_commutant_dim(const JordanStructure& js);

/// Dimension of the pairs (Q, P) of orthogonal matrices with Q Sigma = Sigma P.
long orthogonal_pair_dim(const SingularProfile& profile);

DimensionReport dim_diagonalizable(const MultiplicityProfile& profile,
                                   Eigenvalues ev = Eigenvalues::Free);
DimensionReport dim_normal(const MultiplicityProfile& profile, Eigenvalues ev = Eigenvalues::Free);
DimensionReport dim_hermitian(const MultiplicityProfile& profile,
                              Eigenvalues ev = Eigenvalues::Free);
DimensionReport dim_skew_hermitian(const MultiplicityProfile& profile,
                                   Eigenvalues ev = Eigenvalues::Free);
DimensionReport dim_unitary(const MultiplicityProfile& profile, Eigenvalues ev = Eigenvalues::Free);
DimensionReport dim_real_symmetric(const MultiplicityProfile& profile,
                                   Eigenvalues ev = Eigenvalues::Free);
DimensionReport dim_jordan(const JordanStructure& js, Eigenvalues ev = Eigenvalues::Free);
DimensionReport dim_singular(const SingularProfile& profile, Eigenvalues ev = Eigenvalues::Free);

/// Dispatch for the eigenvalue-multiplicity classes. Throws for JordanForm and
/// SingularValues, which take other profile types.
DimensionReport dimension(MatrixClass cls, const MultiplicityProfile& profile,
                          Eigenvalues ev = Eigenvalues::Free);

struct TableRow {
  int index;
  std::string set;
  std::string complex_formula;  // "---" where the set has no complex structure
  std::string real_formula;
  std::optional<long> complex_dim;
  std::optional<long> real_dim;
};

struct Table1Params {
  int n;
  int m;
  int r;
};

/// Dimensions of common matrix sets. Values are filled only when params is given.
std::vector<TableRow> table1(std::optional<Table1Params> params = std::nullopt);

struct Table2Params {
  std::optional<MultiplicityProfile> eigen;   // rows 1-5
  std::optional<SingularProfile> singular;    // rows 6 and 8
  std::optional<JordanStructure> jordan;      // row 7
};

/// Dimensions of the multiplicity strata. In numeric mode only rows whose
/// parameters are supplied are returned.
std::vector<TableRow> table2(std::optional<Table2Params> params = std::nullopt);

}  // namespace strata
