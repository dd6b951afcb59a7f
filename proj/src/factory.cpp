#include "strata/factory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace strata {

namespace {

constexpr int kMaxRejections = 10000;
constexpr int kMaxTransformAttempts = 100;

std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(derive_seed(seed, 0)); }

}  // namespace

SpectrumSpec::SpectrumSpec(std::vector<Complex> values, SpectrumKind kind, double min_gap)
    : values_(std::move(values)), kind_(kind), min_gap_(min_gap) {
  if (!(min_gap_ > 0.0)) throw std::invalid_argument("spectrum: min_gap must be positive");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Complex v = values_[i];
    switch (kind_) {
      case SpectrumKind::Complex:
        break;
      case SpectrumKind::Real:
        if (v.imag() != 0.0) throw std::invalid_argument("spectrum: real kind with complex value");
        break;
      case SpectrumKind::Unimodular:
        if (std::abs(std::abs(v) - 1.0) > 1e-12) {
          throw std::invalid_argument("spectrum: unimodular value off the unit circle");
        }
        break;
      case SpectrumKind::PositiveDecreasing:
        if (v.imag() != 0.0 || !(v.real() > 0.0)) {
          throw std::invalid_argument("spectrum: singular values must be real and positive");
        }
        if (i > 0 && !(v.real() < values_[i - 1].real())) {
          throw std::invalid_argument("spectrum: singular values must be strictly decreasing");
        }
        break;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(v - values_[j]) < min_gap_) {
        throw std::invalid_argument("spectrum: values " + std::to_string(j) + " and " +
                                    std::to_string(i) + " closer than min_gap");
      }
    }
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

SpectrumSpec sample_spectrum(int count, SpectrumKind kind, std::uint64_t seed, double min_gap) {
  if (count < 1) throw std::invalid_argument("sample_spectrum: count must be >= 1");
  if (!(min_gap > 0.0)) throw std::invalid_argument("sample_spectrum: min_gap must be positive");
  auto engine = make_engine(seed);

  const double spread = std::max(1.0, count * min_gap);
  const double box = kind == SpectrumKind::Complex ? std::max(1.0, std::sqrt(count) * min_gap)
                                                   : spread;
  std::uniform_real_distribution<double> uniform(-box, box);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> positive(0.5, 0.5 + 2.0 * spread);

  auto draw = [&]() -> Complex {
    switch (kind) {
      case SpectrumKind::Complex: {
        const double re = uniform(engine);
        return {re, uniform(engine)};
      }
      case SpectrumKind::Real:
        return {uniform(engine), 0.0};
      case SpectrumKind::Unimodular:
        return std::polar(1.0, angle(engine));
      case SpectrumKind::PositiveDecreasing:
        return {positive(engine), 0.0};
    }
    return {};
  };

  std::vector<Complex> values;
  int rejections = 0;
  while (static_cast<int>(values.size()) < count) {
    const Complex v = draw();
    const bool separated = std::all_of(values.begin(), values.end(),
                                       [&](Complex u) { return std::abs(u - v) >= min_gap; });
    if (separated) {
      values.push_back(v);
    } else if (++rejections > kMaxRejections) {
      throw std::runtime_error("sample_spectrum: could not place " + std::to_string(count) +
                               " values with gap " + std::to_string(min_gap));
    }
  }
  if (kind == SpectrumKind::PositiveDecreasing) {
    std::sort(values.begin(), values.end(),
              [](Complex a, Complex b) { return a.real() > b.real(); });
  }
  return SpectrumSpec(std::move(values), kind, min_gap);
}

Eigen::MatrixXcd make_block_diagonal_lambda(const MultiplicityProfile& profile,
                                            const SpectrumSpec& spec) {
  if (spec.size() != profile.distinct_count()) {
    throw std::invalid_argument("make_block_diagonal_lambda: need " +
                                std::to_string(profile.distinct_count()) + " values, got " +
                                std::to_string(spec.size()));
  }
  Eigen::VectorXcd diag(profile.order());
  int row = 0;
  for (int i = 0; i < profile.distinct_count(); ++i) {
    for (int c = 0; c < profile.parts()[i]; ++c) diag(row++) = spec.values()[i];
  }
  return diag.asDiagonal();
}

std::vector<JordanBlock> jordan_layout(const JordanStructure& js) {
  std::vector<JordanBlock> layout;
  int offset = 0;
  for (int a = 0; a < js.eigenvalue_count(); ++a) {
    for (int size : js.blocks(a)) {
      layout.push_back({a, size, offset});
      offset += size;
    }
  }
  return layout;
}

Eigen::MatrixXcd make_jordan(const JordanStructure& js, const SpectrumSpec& spec) {
  if (spec.size() != js.eigenvalue_count()) {
    throw std::invalid_argument("make_jordan: need " + std::to_string(js.eigenvalue_count()) +
                                " values, got " + std::to_string(spec.size()));
  }
  const int n = js.order();
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& block : jordan_layout(js)) {
    for (int s = 0; s < block.size; ++s) {
      j(block.offset + s, block.offset + s) = spec.values()[block.eigenvalue];
      if (s + 1 < block.size) j(block.offset + s, block.offset + s + 1) = 1.0;
    }
  }
  return j;
}

Eigen::MatrixXd make_sigma(const SingularProfile& profile, const SpectrumSpec& spec) {
  if (spec.kind() != SpectrumKind::PositiveDecreasing) {
    throw std::invalid_argument("make_sigma: spectrum must be positive and strictly decreasing");
  }
  if (spec.size() != profile.distinct_count()) {
    throw std::invalid_argument("make_sigma: need " + std::to_string(profile.distinct_count()) +
                                " values, got " + std::to_string(spec.size()));
  }
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(profile.rows(), profile.cols());
  int slot = 0;
  for (int j = 0; j < profile.distinct_count(); ++j) {
    for (int c = 0; c < profile.parts()[j]; ++c, ++slot) sigma(slot, slot) = spec.values()[j].real();
  }
  return sigma;
}

Eigen::MatrixXd random_orthogonal(int order, std::uint64_t seed) {
  if (order < 1) throw std::invalid_argument("random_orthogonal: order must be >= 1");
  auto engine = make_engine(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd sample(order, order);
  for (int c = 0; c < order; ++c) {
    for (int r = 0; r < order; ++r) sample(r, c) = normal(engine);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(sample);
  Eigen::MatrixXd q = qr.householderQ();
  for (int c = 0; c < order; ++c) {
    if (qr.matrixQR()(c, c) < 0.0) q.col(c) *= -1.0;
  }
  return q;
}

double condition_number(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  return smallest > 0.0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
}

Eigen::MatrixXcd random_transform(int order, TransformKind kind, std::uint64_t seed,
                                  double condition_cap) {
  if (order < 1) throw std::invalid_argument("random_transform: order must be >= 1");
  if (kind == TransformKind::Orthogonal) return random_orthogonal(order, seed).cast<Complex>();

  auto engine = make_engine(seed);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < kMaxTransformAttempts; ++attempt) {
    Eigen::MatrixXcd sample(order, order);
    for (int c = 0; c < order; ++c) {
      for (int r = 0; r < order; ++r) {
        const double re = normal(engine);
        sample(r, c) = Complex(re, normal(engine));
      }
    }
    if (kind == TransformKind::Unitary) {
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(sample);
      Eigen::MatrixXcd q = qr.householderQ();
      for (int c = 0; c < order; ++c) {
        const Complex d = qr.matrixQR()(c, c);
        if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
      }
      return q;
    }
    if (condition_number(sample) <= condition_cap) return sample;
  }
  throw std::runtime_error("random_transform: no sample with condition <= " +
                           std::to_string(condition_cap) + " after 100 attempts");
}

}  // namespace strata
