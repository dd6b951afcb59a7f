// Independent reference computations used by the tests. Nothing here calls
// into the library's own rank or counting code.
#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;

// Number of partitions of n by Euler's pentagonal recurrence.
inline long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > i) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      p[i] += sign * p[i - g1];
      if (g2 <= i) p[i] += sign * p[i - g2];
    }
  }
  return p[n];
}

// Transpose of the Ferrers diagram: drop one cell from each row until empty.
inline std::vector<int> conjugate(std::vector<int> rows) {
  std::vector<int> cols;
  while (true) {
    int count = 0;
    for (int& r : rows) {
      if (r > 0) {
        --r;
        ++count;
      }
    }
    if (count == 0) break;
    cols.push_back(count);
  }
  return cols;
}

// Rank by full-pivot Householder QR with an absolute threshold relative to the
// largest pivot; a different factorization from the library's SVD route.
template <class Matrix>
int qr_rank(const Matrix& m, double relative = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::FullPivHouseholderQR<Matrix> qr(m);
  const double largest = m.cwiseAbs().maxCoeff();
  if (largest == 0.0) return 0;
  qr.setThreshold(relative);
  return static_cast<int>(qr.rank());
}

// Matrix of S -> SJ - JS built by applying the map to each unit matrix E_st.
inline Eigen::MatrixXcd commutator_map(const Eigen::MatrixXcd& j) {
  const Eigen::Index n = j.rows();
  Eigen::MatrixXcd op(n * n, n * n);
  for (Eigen::Index t = 0; t < n; ++t) {
    for (Eigen::Index s = 0; s < n; ++s) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
      e(s, t) = 1.0;
      const Eigen::MatrixXcd image = e * j - j * e;
      op.col(s + t * n) = image.reshaped();
    }
  }
  return op;
}

inline int commutant_nullity(const Eigen::MatrixXcd& j) {
  const Eigen::Index n = j.rows();
  return static_cast<int>(n * n) - qr_rank(commutator_map(j));
}

// Complex commutant dimension of a Jordan matrix: for each eigenvalue, the sum
// of min(k_i, k_j) over all ordered pairs of its blocks.
inline long jordan_commutant_by_pairs(const std::vector<std::vector<int>>& groups) {
  long total = 0;
  for (const auto& g : groups) {
    for (int a : g) {
      for (int b : g) total += std::min(a, b);
    }
  }
  return total;
}

inline Eigen::MatrixXcd random_complex(int rows, int cols, std::mt19937_64& engine) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const double re = normal(engine);
    m.data()[i] = C(re, normal(engine));
  }
  return m;
}

// Eigenvalues of m grouped into clusters of points within tol of each other.
// Returns (representative, count) pairs.
inline std::vector<std::pair<C, int>> cluster(const Eigen::VectorXcd& values, double tol) {
  std::vector<std::pair<C, int>> groups;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    bool placed = false;
    for (auto& g : groups) {
      if (std::abs(g.first - values(i)) < tol) {
        ++g.second;
        placed = true;
        break;
      }
    }
    if (!placed) groups.emplace_back(values(i), 1);
  }
  return groups;
}

}  // namespace oracle
