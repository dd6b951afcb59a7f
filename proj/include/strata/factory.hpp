#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "strata/formulas.hpp"
#include "strata/profiles.hpp"

namespace strata {

using Complex = std::complex<double>;

enum class SpectrumKind { Complex, Real, Unimodular, PositiveDecreasing };

/// Distinct eigenvalues or singular values, pairwise separated by at least min_gap.
class SpectrumSpec {
 public:
  /// Throws std::invalid_argument if the values violate the kind or the gap.
  SpectrumSpec(std::vector<Complex> values, SpectrumKind kind, double min_gap = 0.1);

  const std::vector<Complex>& values() const { return values_; }
  SpectrumKind kind() const { return kind_; }
  double min_gap() const { return min_gap_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<Complex> values_;
  SpectrumKind kind_;
  double min_gap_;
};

/// splitmix64-style mixing; combines a base seed with case/trial indices.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// Rejection-samples `count` separated values. Real and complex values come
/// from a box of half-width max(1, count * min_gap) (per axis, sqrt(count) for
/// complex); unimodular values from uniform angles; positive-decreasing values
/// from [0.5, 0.5 + 2 max(1, count * min_gap)] sorted descending.
/// Throws std::runtime_error after a bounded number of rejections.
SpectrumSpec sample_spectrum(int count, SpectrumKind kind, std::uint64_t seed,
                             double min_gap = 0.1);

/// Diagonal matrix with value i repeated parts[i] times, in profile order.
Eigen::MatrixXcd make_block_diagonal_lambda(const MultiplicityProfile& profile,
                                            const SpectrumSpec& spec);

struct JordanBlock {
  int eigenvalue;  // index into the structure's eigenvalue list
  int size;
  int offset;      // first row/column of the block
};

/// Block placement used by make_jordan: eigenvalue groups in structure order,
/// blocks inside a group in weakly decreasing size.
std::vector<JordanBlock> jordan_layout(const JordanStructure& js);

Eigen::MatrixXcd make_jordan(const JordanStructure& js, const SpectrumSpec& spec);

/// n x m matrix with sigma_j repeated k_j times on the leading diagonal, zeros
/// elsewhere. spec must be positive and strictly decreasing.
Eigen::MatrixXd make_sigma(const SingularProfile& profile, const SpectrumSpec& spec);

/// Random orthogonal matrix: Q factor of a Gaussian sample, with signs chosen
/// so the triangular factor has a positive diagonal.
Eigen::MatrixXd random_orthogonal(int order, std::uint64_t seed);

/// InvertibleComplex: Gaussian real and imaginary parts, resampled while the
/// 2-norm condition number exceeds condition_cap (at most 100 attempts).
/// Unitary: phase-normalized Q factor of such a sample. Orthogonal: the real
/// random_orthogonal, widened to complex.
Eigen::MatrixXcd random_transform(int order, TransformKind kind, std::uint64_t seed,
                                  double condition_cap = 1e6);

double condition_number(const Eigen::MatrixXcd& m);

}  // namespace strata
