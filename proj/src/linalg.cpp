#include "strata/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace strata {

void RankSettings::validate() const {
  if (!(tolerance > 0.0 && tolerance < 1e-2)) {
    throw std::invalid_argument("tolerance must lie in (0, 1e-2), got " + std::to_string(tolerance));
  }
  if (!(gap_requirement >= 1.0)) {
    throw std::invalid_argument("gap requirement must be >= 1, got " +
                                std::to_string(gap_requirement));
  }
  if (!(indecision_band >= 1.0)) {
    throw std::invalid_argument("indecision band must be >= 1");
  }
}

namespace {

std::string describe(const RankDecision& d) {
  std::ostringstream out;
  out << "inconclusive rank (" << d.reason << "), threshold " << d.threshold << ", spectrum [";
  for (Eigen::Index i = 0; i < d.singular_values.size(); ++i) {
    out << (i ? ", " : "") << d.singular_values(i);
  }
  out << "]";
  return out.str();
}

}  // namespace

InconclusiveRank::InconclusiveRank(RankDecision decision)
    : std::runtime_error(describe(decision)), decision_(std::move(decision)) {}

RankDecision decide_rank(const Eigen::VectorXd& singular_values, const RankSettings& settings) {
  RankDecision d;
  d.singular_values = singular_values;
  const Eigen::Index count = singular_values.size();
  const double largest = count > 0 ? singular_values(0) : 0.0;
  constexpr double inf = std::numeric_limits<double>::infinity();

  // Empty or identically zero operator: rank 0, nothing to decide.
  if (count == 0 || largest == 0.0) {
    d.rank = 0;
    d.gap_ratio = inf;
    return d;
  }

  d.threshold = settings.tolerance * largest;
  Eigen::Index rank = 0;
  while (rank < count && singular_values(rank) > d.threshold) ++rank;
  d.rank = static_cast<int>(rank);

  const double smallest_kept = rank > 0 ? singular_values(rank - 1) : inf;
  const double largest_dropped = rank < count ? singular_values(rank) : 0.0;
  d.gap_ratio = largest_dropped > 0.0 && rank > 0 ? smallest_kept / largest_dropped : inf;

  const double lo = d.threshold / settings.indecision_band;
  const double hi = d.threshold * settings.indecision_band;
  for (Eigen::Index i = 0; i < count; ++i) {
    if (singular_values(i) >= lo && singular_values(i) <= hi) {
      d.conclusive = false;
      d.reason = "singular value " + std::to_string(singular_values(i)) + " inside indecision band";
      return d;
    }
  }
  if (d.gap_ratio < settings.gap_requirement) {
    d.conclusive = false;
    d.reason = "gap ratio " + std::to_string(d.gap_ratio) + " below requirement";
  }
  return d;
}

RankDecision numerical_rank(const Eigen::MatrixXd& m, const RankSettings& settings) {
  if (m.size() == 0) return decide_rank(Eigen::VectorXd(), settings);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return decide_rank(svd.singularValues(), settings);
}

RankDecision numerical_rank(const Eigen::MatrixXcd& m, const RankSettings& settings) {
  if (m.size() == 0) return decide_rank(Eigen::VectorXd(), settings);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return decide_rank(svd.singularValues(), settings);
}

Eigen::VectorXd realify(const Eigen::MatrixXcd& m) {
  const Eigen::Index size = m.size();
  Eigen::VectorXd v(2 * size);
  for (Eigen::Index i = 0; i < size; ++i) {
    v(i) = m.data()[i].real();
    v(size + i) = m.data()[i].imag();
  }
  return v;
}

Eigen::MatrixXcd unrealify(const Eigen::VectorXd& v, int rows, int cols) {
  const Eigen::Index size = static_cast<Eigen::Index>(rows) * cols;
  if (v.size() != 2 * size) throw std::invalid_argument("unrealify: length mismatch");
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < size; ++i) m.data()[i] = {v(i), v(size + i)};
  return m;
}

std::vector<Eigen::MatrixXcd> skew_hermitian_basis(int n) {
  using C = std::complex<double>;
  std::vector<Eigen::MatrixXcd> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
    e(s, s) = C(0.0, 1.0);
    basis.push_back(e);
  }
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      Eigen::MatrixXcd re = Eigen::MatrixXcd::Zero(n, n);
      re(s, t) = 1.0;
      re(t, s) = -1.0;
      basis.push_back(re);
      Eigen::MatrixXcd im = Eigen::MatrixXcd::Zero(n, n);
      im(s, t) = C(0.0, 1.0);
      im(t, s) = C(0.0, 1.0);
      basis.push_back(im);
    }
  }
  return basis;
}

std::vector<Eigen::MatrixXd> skew_symmetric_basis(int n) {
  std::vector<Eigen::MatrixXd> basis;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(s, t) = 1.0;
      e(t, s) = -1.0;
      basis.push_back(e);
    }
  }
  return basis;
}

}  // namespace strata
