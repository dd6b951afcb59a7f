#pragma once

#include <span>
#include <vector>

namespace strata {

/// A list of positive integers. Whether it must be sorted depends on the caller.
using Partition = std::vector<int>;

/// Eigenvalue multiplicities (k_1, ..., k_I) of an order-n matrix, kept in
/// the order the caller supplied them.
class MultiplicityProfile {
 public:
  /// Order is taken as the sum of the parts.
  explicit MultiplicityProfile(Partition parts);
  /// Throws std::invalid_argument unless the parts are positive and sum to n.
  MultiplicityProfile(int n, Partition parts);

  int order() const { return n_; }
  int distinct_count() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }

  bool operator==(const MultiplicityProfile&) const = default;

 private:
  int n_;
  Partition parts_;
};

/// Jordan data: for each distinct eigenvalue a, the weakly decreasing block
/// sizes k_{a1} >= k_{a2} >= ... >= k_{aN_a}.
class JordanStructure {
 public:
  explicit JordanStructure(std::vector<Partition> blocks);
  JordanStructure(int n, std::vector<Partition> blocks);

  int order() const { return n_; }
  int eigenvalue_count() const { return static_cast<int>(blocks_.size()); }
  /// Block sizes attached to eigenvalue a.
  std::span<const int> blocks(int a) const { return blocks_.at(a); }
  const std::vector<Partition>& all_blocks() const { return blocks_; }
  /// n_a, the algebraic multiplicity of eigenvalue a.
  int multiplicity(int a) const;
  /// N_a
  int block_count(int a) const { return static_cast<int>(blocks_.at(a).size()); }
  /// N*, the largest number of blocks sharing one eigenvalue.
  int max_block_count() const;

  bool operator==(const JordanStructure&) const = default;

 private:
  int n_;
  std::vector<Partition> blocks_;
};

/// Shape n x m, and multiplicities (k_1, ..., k_J) of the distinct nonzero
/// singular values sigma_1 > ... > sigma_J. Rank r = sum of the k_j; r may be 0.
class SingularProfile {
 public:
  SingularProfile(int rows, int cols, Partition parts);

  int rows() const { return n_; }
  int cols() const { return m_; }
  int rank() const { return r_; }
  int distinct_count() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }

  bool operator==(const SingularProfile&) const = default;

 private:
  int n_;
  int m_;
  int r_;
  Partition parts_;
};

Partition sorted_parts(const MultiplicityProfile& profile);

/// Degrees m_j of the invariant polynomials: column sums of the block-size
/// table, with k_{aj} = 0 for j > N_a.
Partition invariant_degrees(const JordanStructure& js);

/// Sum of min(k_i, k_j) over all ordered pairs (i, j).
long pairwise_min_sum(std::span<const int> partition);

/// Sum of (2j - 1) k_j. Requires a weakly decreasing partition; equals
/// pairwise_min_sum on the same input.
long weighted_degree_sum(std::span<const int> partition);

/// All partitions of n as weakly decreasing lists, in lexicographically
/// decreasing order: (n), (n-1, 1), ..., (1, ..., 1). Empty partition for n == 0.
std::vector<Partition> enumerate_partitions(int n);

/// Every assignment of block partitions to 1..max_p labelled eigenvalues with
/// total order n. Eigenvalue groups are ordered, so ((2),(1)) and ((1),(2))
/// both appear. Order is deterministic.
std::vector<JordanStructure> enumerate_jordan_structures(int n, int max_p);

/// All profiles with 1 <= rows <= max_n, 1 <= cols <= max_m, and every
/// partition of every r <= min(rows, cols).
std::vector<SingularProfile> enumerate_singular_profiles(int max_n, int max_m);

}  // namespace strata
