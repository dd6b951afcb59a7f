#include "strata/formulas.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace strata {

namespace {

constexpr std::array<std::pair<MatrixClass, std::string_view>, 8> kClassNames{{
    {MatrixClass::DiagonalizableComplex, "diagonalizable"},
    {MatrixClass::Normal, "normal"},
    {MatrixClass::Hermitian, "hermitian"},
    {MatrixClass::SkewHermitian, "skew-hermitian"},
    {MatrixClass::Unitary, "unitary"},
    {MatrixClass::RealSymmetric, "real-symmetric"},
    {MatrixClass::JordanForm, "jordan"},
    {MatrixClass::SingularValues, "singular"},
}};

constexpr const char* kEigenTerm = "eigenvalues";
constexpr const char* kSingularTerm = "singular values";

long sum_squares(std::span<const int> parts) {
  long s = 0;
  for (int k : parts) s += static_cast<long>(k) * k;
  return s;
}

long sum_pairs(std::span<const int> parts) {
  long s = 0;
  for (int k : parts) s += static_cast<long>(k) * (k - 1) / 2;
  return s;
}

DimensionReport finish(MatrixClass cls, FieldKind field, Eigenvalues ev, std::string ambient,
                       long ambient_dim, std::vector<Term> terms) {
  long stratum = 0;
  for (const auto& t : terms) stratum += t.value;
  return DimensionReport{cls, field, ev, std::move(ambient), ambient_dim, stratum,
                         ambient_dim - stratum, std::move(terms), std::nullopt};
}

// Shared by the three unitarily diagonalizable classes: unitary group, block
// unitary commutant, then the eigenvalue parameters.
DimensionReport unitary_orbit(MatrixClass cls, const MultiplicityProfile& profile, Eigenvalues ev,
                              long eigen_params, std::string ambient, long ambient_dim) {
  const long n = profile.order();
  std::vector<Term> terms{
      {"transform group", n * n},
      {"commutant", -commutant_dim_diagonal(profile, TransformKind::Unitary)},
      {kEigenTerm, ev == Eigenvalues::Free ? eigen_params : 0},
  };
  return finish(cls, FieldKind::Real, ev, std::move(ambient), ambient_dim, std::move(terms));
}

}  // namespace

std::string_view class_name(MatrixClass cls) {
  for (const auto& [c, name] : kClassNames) {
    if (c == cls) return name;
  }
  throw std::logic_error("unknown matrix class");
}

MatrixClass parse_class(std::string_view name) {
  for (const auto& [c, known] : kClassNames) {
    if (known == name) return c;
  }
  throw std::invalid_argument("unknown matrix class '" + std::string(name) + "'");
}

MatrixClass canonical_class(MatrixClass cls) {
  return cls == MatrixClass::SkewHermitian ? MatrixClass::Hermitian : cls;
}

FieldKind field_of(MatrixClass cls) {
  switch (cls) {
    case MatrixClass::DiagonalizableComplex:
    case MatrixClass::JordanForm:
      return FieldKind::Complex;
    default:
      return FieldKind::Real;
  }
}

long DimensionReport::eigenvalue_term() const {
  for (const auto& t : terms) {
    if (t.label == kEigenTerm || t.label == kSingularTerm) return t.value;
  }
  return 0;
}

long commutant_dim_diagonal(const MultiplicityProfile& profile, TransformKind kind) {
  switch (kind) {
    case TransformKind::InvertibleComplex:
    case TransformKind::Unitary:
      return sum_squares(profile.parts());
    case TransformKind::Orthogonal:
      return sum_pairs(profile.parts());
  }
  throw std::logic_error("unknown transform kind");
}

long jordan_commutant_dim(const JordanStructure& js) {
  const Partition m = invariant_degrees(js);
  return weighted_degree_sum(m);
}

long orthogonal_pair_dim(const SingularProfile& profile) {
  const long nr = profile.rows() - profile.rank();
  const long mr = profile.cols() - profile.rank();
  return sum_pairs(profile.parts()) + nr * (nr - 1) / 2 + mr * (mr - 1) / 2;
}

DimensionReport dim_diagonalizable(const MultiplicityProfile& profile, Eigenvalues ev) {
  const long n = profile.order();
  std::vector<Term> terms{
      {"transform group", n * n},
      {"commutant", -commutant_dim_diagonal(profile, TransformKind::InvertibleComplex)},
      {kEigenTerm, ev == Eigenvalues::Free ? profile.distinct_count() : 0},
  };
  return finish(MatrixClass::DiagonalizableComplex, FieldKind::Complex, ev, "C^{nn}", n * n,
                std::move(terms));
}

DimensionReport dim_normal(const MultiplicityProfile& profile, Eigenvalues ev) {
  const long n = profile.order();
  return unitary_orbit(MatrixClass::Normal, profile, ev, 2L * profile.distinct_count(),
                       "normal matrices", n * n + n);
}

DimensionReport dim_hermitian(const MultiplicityProfile& profile, Eigenvalues ev) {
  const long n = profile.order();
  return unitary_orbit(MatrixClass::Hermitian, profile, ev, profile.distinct_count(),
                       "Hermitian matrices", n * n);
}

DimensionReport dim_skew_hermitian(const MultiplicityProfile& profile, Eigenvalues ev) {
  DimensionReport r = dim_hermitian(profile, ev);
  r.cls = MatrixClass::SkewHermitian;
  r.ambient = "skew-Hermitian matrices";
  return r;
}

DimensionReport dim_unitary(const MultiplicityProfile& profile, Eigenvalues ev) {
  const long n = profile.order();
  return unitary_orbit(MatrixClass::Unitary, profile, ev, profile.distinct_count(),
                       "unitary matrices", n * n);
}

DimensionReport dim_real_symmetric(const MultiplicityProfile& profile, Eigenvalues ev) {
  const long n = profile.order();
  std::vector<Term> terms{
      {"transform group", n * (n - 1) / 2},
      {"commutant", -commutant_dim_diagonal(profile, TransformKind::Orthogonal)},
      {kEigenTerm, ev == Eigenvalues::Free ? profile.distinct_count() : 0},
  };
  return finish(MatrixClass::RealSymmetric, FieldKind::Real, ev, "real symmetric matrices",
                n * (n + 1) / 2, std::move(terms));
}

DimensionReport dim_jordan(const JordanStructure& js, Eigenvalues ev) {
  const long n = js.order();
  std::vector<Term> terms{
      {"transform group", n * n},
      {"commutant", -jordan_commutant_dim(js)},
      {kEigenTerm, ev == Eigenvalues::Free ? js.eigenvalue_count() : 0},
  };
  return finish(MatrixClass::JordanForm, FieldKind::Complex, ev, "C^{nn}", n * n,
                std::move(terms));
}

DimensionReport dim_singular(const SingularProfile& profile, Eigenvalues ev) {
  const long n = profile.rows();
  const long m = profile.cols();
  const long r = profile.rank();
  std::vector<Term> terms{
      {"left orthogonal group", n * (n - 1) / 2},
      {"right orthogonal group", m * (m - 1) / 2},
      {"orthogonal pairs fixing sigma", -orthogonal_pair_dim(profile)},
      {kSingularTerm, ev == Eigenvalues::Free ? profile.distinct_count() : 0},
  };
  DimensionReport report =
      finish(MatrixClass::SingularValues, FieldKind::Real, ev, "R^{nm}", n * m, std::move(terms));
  // The rank-r matrices form the open stratum of dimension (n + m - r) r.
  report.codim_in_rank_r = (n + m - r) * r - report.stratum_dim;
  return report;
}

DimensionReport dimension(MatrixClass cls, const MultiplicityProfile& profile, Eigenvalues ev) {
  switch (cls) {
    case MatrixClass::DiagonalizableComplex:
      return dim_diagonalizable(profile, ev);
    case MatrixClass::Normal:
      return dim_normal(profile, ev);
    case MatrixClass::Hermitian:
      return dim_hermitian(profile, ev);
    case MatrixClass::SkewHermitian:
      return dim_skew_hermitian(profile, ev);
    case MatrixClass::Unitary:
      return dim_unitary(profile, ev);
    case MatrixClass::RealSymmetric:
      return dim_real_symmetric(profile, ev);
    case MatrixClass::JordanForm:
    case MatrixClass::SingularValues:
      break;
  }
  throw std::invalid_argument(std::string(class_name(cls)) +
                              " strata are not described by a multiplicity profile");
}

std::vector<TableRow> table1(std::optional<Table1Params> params) {
  std::vector<TableRow> rows{
      {1, "All", "n^2", "2n^2", {}, {}},
      {2, "Invertible", "n^2", "2n^2", {}, {}},
      {3, "Singular", "n^2-1", "2(n^2-1)", {}, {}},
      {4, "Diagonalizable", "n^2", "2n^2", {}, {}},
      {5, "Normal", "n(n+1)/2", "n(n+1)", {}, {}},
      {6, "Hermitian", "---", "n^2", {}, {}},
      {7, "Unitary", "---", "n^2", {}, {}},
      {8, "Symmetric", "n(n+1)/2", "n(n+1)", {}, {}},
      {9, "Real Symmetric", "---", "n(n+1)/2", {}, {}},
      {10, "Antisymmetric", "n(n-1)/2", "n(n-1)", {}, {}},
      {11, "Real Antisymmetric", "---", "n(n-1)/2", {}, {}},
      {12, "Orthogonal", "---", "n(n-1)/2", {}, {}},
      {13, "Matrices in C^{nn} rank r <= min(n, m)", "(m+n-r)r", "2(m+n-r)r", {}, {}},
  };
  if (!params) return rows;

  const long n = params->n;
  const long m = params->m;
  const long r = params->r;
  if (n < 1 || m < 1 || r < 0 || r > std::min(n, m)) {
    throw std::invalid_argument("table 1: need n, m >= 1 and 0 <= r <= min(n, m)");
  }
  const std::array<std::optional<long>, 13> complex_dims{
      n * n, n * n, n * n - 1, n * n, n * (n + 1) / 2, std::nullopt, std::nullopt,
      n * (n + 1) / 2, std::nullopt, n * (n - 1) / 2, std::nullopt, std::nullopt,
      (m + n - r) * r};
  const std::array<long, 13> real_dims{
      2 * n * n, 2 * n * n, 2 * (n * n - 1), 2 * n * n, n * (n + 1), n * n, n * n,
      n * (n + 1), n * (n + 1) / 2, n * (n - 1), n * (n - 1) / 2, n * (n - 1) / 2,
      2 * (m + n - r) * r};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].complex_dim = complex_dims[i];
    rows[i].real_dim = real_dims[i];
  }
  return rows;
}

std::vector<TableRow> table2(std::optional<Table2Params> params) {
  std::vector<TableRow> rows{
      {1, "Diagonalizable", "n^2 - sum_{i=1}^{I} (k_i^2 - 1)",
       "2[n^2 - sum_{i=1}^{I} (k_i^2 - 1)]", {}, {}},
      {2, "Normal", "---", "n^2 + I - sum_{i=1}^{I} (k_i^2 - 1)", {}, {}},
      {3, "Hermitian", "---", "n^2 - sum_{i=1}^{I} (k_i^2 - 1)", {}, {}},
      {4, "Unitary", "---", "n^2 - sum_{i=1}^{I} (k_i^2 - 1)", {}, {}},
      {5, "Real Symmetric", "---", "n(n-1)/2 + I - 1/2 sum_{i=1}^{I} k_i(k_i - 1)", {}, {}},
      {6, "Matrices in R^{nm} mult k_1,...,k_I, sum_{i=1}^{I} k_i = r", "---",
       "(n+m-r)r - r + I - 1/2 sum_{i=1}^{I} k_i(k_i - 1)", {}, {}},
      {7, "with normal form J", "---", "n^2 - sum_{j=1}^{N*} (2j-1) sum_{a=1}^{p} k_aj + p", {},
       {}},
      {8, "A in R^{nm} with singular value multiplicities k_1,...,k_J", "---",
       "(n+m-r)r - r - 1/2 sum_{j=1}^{J} k_j(k_j - 1) + J", {}, {}},
  };
  if (!params) return rows;

  std::vector<TableRow> out;
  if (params->eigen) {
    const auto& p = *params->eigen;
    TableRow diag = rows[0];
    const auto d = dim_diagonalizable(p);
    diag.complex_dim = d.stratum_dim;
    diag.real_dim = d.real_stratum_dim();
    out.push_back(diag);
    const std::array<DimensionReport, 4> real_rows{dim_normal(p), dim_hermitian(p), dim_unitary(p),
                                                   dim_real_symmetric(p)};
    for (std::size_t i = 0; i < real_rows.size(); ++i) {
      TableRow row = rows[i + 1];
      row.real_dim = real_rows[i].stratum_dim;
      out.push_back(row);
    }
  }
  if (params->singular) {
    const auto d = dim_singular(*params->singular);
    TableRow row6 = rows[5];
    row6.real_dim = d.stratum_dim;
    out.push_back(row6);
  }
  if (params->jordan) {
    // The Jordan count is a complex dimension; numeric mode fills both columns.
    const auto d = dim_jordan(*params->jordan);
    TableRow row7 = rows[6];
    row7.complex_dim = d.stratum_dim;
    row7.real_dim = d.real_stratum_dim();
    out.push_back(row7);
  }
  if (params->singular) {
    TableRow row8 = rows[7];
    row8.real_dim = dim_singular(*params->singular).stratum_dim;
    out.push_back(row8);
  }
  if (out.empty()) {
    throw std::invalid_argument("table 2: numeric mode needs a profile, a Jordan structure, or a "
                                "singular-value profile");
  }
  return out;
}

}  // namespace strata
