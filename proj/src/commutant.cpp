#include "strata/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "strata/factory.hpp"

namespace strata {

namespace {

// Column (k + n l) of the operator is the image of the unit matrix E_kl:
// E_kl J - J E_kl has row k equal to J(l, :) and column l equal to -J(:, k).
void fill_operator_column(const Eigen::MatrixXcd& j, Eigen::MatrixXcd& op, Eigen::Index col) {
  const Eigen::Index n = j.rows();
  const Eigen::Index k = col % n;
  const Eigen::Index l = col / n;
  for (Eigen::Index c = 0; c < n; ++c) op(k + n * c, col) += j(l, c);
  for (Eigen::Index r = 0; r < n; ++r) op(r + n * l, col) -= j(r, k);
}

void require_square(const Eigen::MatrixXcd& j) {
  if (j.rows() != j.cols() || j.rows() == 0) {
    throw std::invalid_argument("commutant: J must be a non-empty square matrix");
  }
}

int nullity_or_throw(const RankDecision& d, int columns) {
  if (!d.conclusive) throw InconclusiveRank(d);
  return columns - d.rank;
}

}  // namespace

Eigen::MatrixXcd commutation_operator(const Eigen::MatrixXcd& j) {
  require_square(j);
  const Eigen::Index size = j.rows() * j.rows();
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(size, size);
#pragma omp parallel for schedule(static)
  for (Eigen::Index col = 0; col < size; ++col) fill_operator_column(j, op, col);
  return op;
}

Eigen::MatrixXcd commutation_operator_serial(const Eigen::MatrixXcd& j) {
  require_square(j);
  const Eigen::Index size = j.rows() * j.rows();
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(size, size);
  for (Eigen::Index col = 0; col < size; ++col) fill_operator_column(j, op, col);
  return op;
}

CommutantBasis commutant_basis(const Eigen::MatrixXcd& j, const RankSettings& settings) {
  settings.validate();
  CommutantBasis out;
  out.operator_matrix = commutation_operator(j);
  out.tolerance_used = settings.tolerance;

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(out.operator_matrix, Eigen::ComputeFullV);
  out.decision = decide_rank(svd.singularValues(), settings);
  const auto size = static_cast<int>(out.operator_matrix.cols());
  out.dimension = nullity_or_throw(out.decision, size);

  const auto n = static_cast<int>(j.rows());
  const Eigen::MatrixXcd& v = svd.matrixV();
  for (int c = out.decision.rank; c < size; ++c) {
    out.null_basis.push_back(Eigen::Map<const Eigen::MatrixXcd>(v.col(c).data(), n, n));
  }
  return out;
}

int commutant_dimension(const Eigen::MatrixXcd& j, const RankSettings& settings) {
  settings.validate();
  const Eigen::MatrixXcd op = commutation_operator(j);
  return nullity_or_throw(numerical_rank(op, settings), static_cast<int>(op.cols()));
}

int commutant_dimension(const Eigen::MatrixXd& j, const RankSettings& settings) {
  settings.validate();
  const Eigen::MatrixXd op = commutation_operator(j.cast<Complex>()).real();
  return nullity_or_throw(numerical_rank(op, settings), static_cast<int>(op.cols()));
}

Nullity group_commutant(const Eigen::MatrixXcd& lambda, TransformKind kind,
                        const RankSettings& settings) {
  require_square(lambda);
  settings.validate();
  const auto n = static_cast<int>(lambda.rows());
  auto nullity = [](const auto& d, const RankSettings& s) {
    Nullity out;
    out.decision = numerical_rank(d, s);
    out.dimension = nullity_or_throw(out.decision, static_cast<int>(d.cols()));
    return out;
  };
  switch (kind) {
    case TransformKind::InvertibleComplex:
      return nullity(commutation_operator(lambda), settings);
    case TransformKind::Unitary: {
      const auto basis = skew_hermitian_basis(n);
      Eigen::MatrixXd d(2 * n * n, static_cast<Eigen::Index>(basis.size()));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        d.col(static_cast<Eigen::Index>(c)) = realify(basis[c] * lambda - lambda * basis[c]);
      }
      return nullity(d, settings);
    }
    case TransformKind::Orthogonal: {
      if (lambda.imag().cwiseAbs().maxCoeff() != 0.0) {
        throw std::invalid_argument("group_commutant: orthogonal case needs real Lambda");
      }
      const Eigen::MatrixXd real_lambda = lambda.real();
      const auto basis = skew_symmetric_basis(n);
      Eigen::MatrixXd d(n * n, static_cast<Eigen::Index>(basis.size()));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const Eigen::MatrixXd image = basis[c] * real_lambda - real_lambda * basis[c];
        d.col(static_cast<Eigen::Index>(c)) = image.reshaped();
      }
      return nullity(d, settings);
    }
  }
  throw std::logic_error("unknown transform kind");
}

int group_commutant_dimension(const Eigen::MatrixXcd& lambda, TransformKind kind,
                              const RankSettings& settings) {
  return group_commutant(lambda, kind, settings).dimension;
}

long commutant_structured_dim(const JordanStructure& js) {
  return weighted_degree_sum(invariant_degrees(js));
}

bool ToeplitzPattern::forced_zero(int s, int t) const {
  if (!same_eigenvalue) return true;
  return t - s < std::max(cols - rows, 0);
}

int ToeplitzPattern::free_diagonals() const {
  int count = 0;
  for (int d = -(rows - 1); d <= cols - 1; ++d) {
    // Diagonal d holds entries (s, s + d); it is free if any of them is.
    const int s = std::max(0, -d);
    if (!forced_zero(s, s + d)) ++count;
  }
  return count;
}

int ToeplitzPattern::free_count() const { return same_eigenvalue ? std::min(rows, cols) : 0; }

bool ToeplitzReport::passed() const {
  return cross_eigenvalue_max <= tolerance && toeplitz_max <= tolerance &&
         zero_pattern_max <= tolerance;
}

std::string ToeplitzReport::describe() const {
  std::ostringstream out;
  out << "cross-eigenvalue max " << cross_eigenvalue_max << ", toeplitz max " << toeplitz_max
      << ", zero-pattern max " << zero_pattern_max << " (tolerance " << tolerance << ")";
  if (worst && !passed()) {
    out << "; worst " << worst->condition << " violation " << worst->magnitude << " in block ("
        << worst->block_i << ", " << worst->block_j << ") at entry (" << worst->s << ", "
        << worst->t << ")";
  }
  return out.str();
}

ToeplitzReport verify_toeplitz_structure(const JordanStructure& js, const CommutantBasis& basis,
                                         double tolerance) {
  ToeplitzReport report;
  report.tolerance = tolerance;
  const auto layout = jordan_layout(js);

  auto record = [&](double& slot, const char* condition, int bi, int bj, int s, int t,
                    double magnitude) {
    slot = std::max(slot, magnitude);
    if (!report.worst || magnitude > report.worst->magnitude) {
      report.worst = StructureViolation{condition, bi, bj, s, t, magnitude};
    }
  };

  for (const auto& element : basis.null_basis) {
    for (std::size_t bi = 0; bi < layout.size(); ++bi) {
      for (std::size_t bj = 0; bj < layout.size(); ++bj) {
        const auto& row_block = layout[bi];
        const auto& col_block = layout[bj];
        const ToeplitzPattern pattern{row_block.size, col_block.size,
                                      row_block.eigenvalue == col_block.eigenvalue};
        const auto sub = element.block(row_block.offset, col_block.offset, row_block.size,
                                       col_block.size);
        const int i = static_cast<int>(bi);
        const int j = static_cast<int>(bj);
        for (int s = 0; s < pattern.rows; ++s) {
          for (int t = 0; t < pattern.cols; ++t) {
            const double value = std::abs(sub(s, t));
            if (!pattern.same_eigenvalue) {
              record(report.cross_eigenvalue_max, "cross-eigenvalue", i, j, s, t, value);
              continue;
            }
            if (pattern.forced_zero(s, t)) {
              record(report.zero_pattern_max, "zero-pattern", i, j, s, t, value);
            }
            if (s + 1 < pattern.rows && t + 1 < pattern.cols) {
              record(report.toeplitz_max, "toeplitz", i, j, s, t,
                     std::abs(sub(s, t) - sub(s + 1, t + 1)));
            }
          }
        }
      }
    }
  }
  return report;
}

QpPairResult solve_qp_pair(const Eigen::MatrixXd& sigma, const SingularProfile& profile,
                           const RankSettings& settings) {
  settings.validate();
  const int n = profile.rows();
  const int m = profile.cols();
  if (sigma.rows() != n || sigma.cols() != m) {
    throw std::invalid_argument("solve_qp_pair: Sigma shape does not match the profile");
  }
  const auto left = skew_symmetric_basis(n);
  const auto right = skew_symmetric_basis(m);
  const auto params = static_cast<Eigen::Index>(left.size() + right.size());

  QpPairResult result;
  result.predicted = orthogonal_pair_dim(profile);
  if (params == 0) {
    result.decision = decide_rank(Eigen::VectorXd(), settings);
    return result;
  }

  Eigen::MatrixXd d(static_cast<Eigen::Index>(n) * m, params);
  Eigen::Index col = 0;
  for (const auto& x : left) d.col(col++) = (x * sigma).reshaped();
  for (const auto& y : right) d.col(col++) = (-sigma * y).reshaped();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullV);
  result.decision = decide_rank(svd.singularValues(), settings);
  result.dimension = nullity_or_throw(result.decision, static_cast<int>(params));

  // Group label of each index: singular-value group j < J, or J for the trailing zero block.
  const int r = profile.rank();
  std::vector<int> group(std::max(n, m), profile.distinct_count());
  for (int j = 0, slot = 0; j < profile.distinct_count(); ++j) {
    for (int c = 0; c < profile.parts()[j]; ++c) group[slot++] = j;
  }

  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index c = result.decision.rank; c < params; ++c) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(m, m);
    Eigen::Index k = 0;
    for (const auto& b : left) x += v(k++, c) * b;
    for (const auto& b : right) y += v(k++, c) * b;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (group[a] != group[b]) result.off_block_max = std::max(result.off_block_max, std::abs(x(a, b)));
      }
    }
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (group[a] != group[b]) result.off_block_max = std::max(result.off_block_max, std::abs(y(a, b)));
      }
    }
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b) {
        if (group[a] == group[b]) {
          result.coupling_max = std::max(result.coupling_max, std::abs(x(a, b) - y(a, b)));
        }
      }
    }
  }
  return result;
}

}  // namespace strata
