#include "strata/tangent_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "strata/factory.hpp"

namespace strata {

namespace {

using C = std::complex<double>;

enum class OrbitKind { General, SkewHermitian, SkewSymmetric, SingularPair };

// Everything needed to write down the differential at one base point.
struct BaseData {
  OrbitKind orbit;
  bool real_image;
  Eigen::MatrixXcd point;
  std::vector<Eigen::MatrixXcd> left_dirs;   // X directions
  std::vector<Eigen::MatrixXcd> right_dirs;  // Y directions (singular pair only)
  std::vector<Eigen::MatrixXcd> eigen_dirs;  // already images

  Eigen::Index columns() const {
    return static_cast<Eigen::Index>(left_dirs.size() + right_dirs.size() + eigen_dirs.size());
  }
  Eigen::Index rows() const {
    const Eigen::Index entries = point.size();
    return real_image ? entries : 2 * entries;
  }
};

std::vector<Eigen::MatrixXcd> general_basis(int n) {
  std::vector<Eigen::MatrixXcd> basis;
  basis.reserve(2 * static_cast<std::size_t>(n) * n);
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
      e(s, t) = 1.0;
      basis.push_back(e);
      e(s, t) = C(0.0, 1.0);
      basis.push_back(e);
    }
  }
  return basis;
}

std::vector<Eigen::MatrixXcd> widen(const std::vector<Eigen::MatrixXd>& real_basis) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(real_basis.size());
  for (const auto& b : real_basis) out.push_back(b.cast<C>());
  return out;
}

// Projector onto the diagonal slots [offset, offset + size).
Eigen::MatrixXcd slot_projector(Eigen::Index rows, Eigen::Index cols, int offset, int size) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(rows, cols);
  for (int s = offset; s < offset + size; ++s) p(s, s) = 1.0;
  return p;
}

BaseData eigen_base(MatrixClass cls, const MultiplicityProfile& profile, std::uint64_t seed,
                    Eigenvalues ev) {
  const int n = profile.order();
  const int count = profile.distinct_count();
  const std::uint64_t spectrum_seed = derive_seed(seed, 1);

  SpectrumKind kind = SpectrumKind::Complex;
  switch (cls) {
    case MatrixClass::Hermitian:
    case MatrixClass::SkewHermitian:
    case MatrixClass::RealSymmetric:
      kind = SpectrumKind::Real;
      break;
    case MatrixClass::Unitary:
      kind = SpectrumKind::Unimodular;
      break;
    default:
      break;
  }
  const SpectrumSpec spec = sample_spectrum(count, kind, spectrum_seed);
  Eigen::MatrixXcd lambda = make_block_diagonal_lambda(profile, spec);
  // Skew-Hermitian strata are i times Hermitian ones.
  const C rotation = cls == MatrixClass::SkewHermitian ? C(0.0, 1.0) : C(1.0, 0.0);
  lambda *= rotation;

  BaseData base{OrbitKind::SkewHermitian, false, lambda, {}, {}, {}};
  switch (cls) {
    case MatrixClass::DiagonalizableComplex:
      base.orbit = OrbitKind::General;
      base.left_dirs = general_basis(n);
      break;
    case MatrixClass::RealSymmetric:
      base.orbit = OrbitKind::SkewSymmetric;
      base.real_image = true;
      base.left_dirs = widen(skew_symmetric_basis(n));
      break;
    default:
      base.left_dirs = skew_hermitian_basis(n);
      break;
  }

  if (ev == Eigenvalues::Free) {
    int offset = 0;
    for (int a = 0; a < count; ++a) {
      const Eigen::MatrixXcd p = slot_projector(n, n, offset, profile.parts()[a]);
      offset += profile.parts()[a];
      switch (cls) {
        case MatrixClass::DiagonalizableComplex:
        case MatrixClass::Normal:
          base.eigen_dirs.push_back(p);
          base.eigen_dirs.push_back(C(0.0, 1.0) * p);
          break;
        case MatrixClass::Unitary:
          // Moving along the unit circle: d(lambda) = i lambda d(theta).
          base.eigen_dirs.push_back(C(0.0, 1.0) * spec.values()[a] * p);
          break;
        default:
          base.eigen_dirs.push_back(rotation * p);
          break;
      }
    }
  }
  return base;
}

BaseData jordan_base(const JordanStructure& js, std::uint64_t seed, Eigenvalues ev) {
  const int n = js.order();
  const SpectrumSpec spec = sample_spectrum(js.eigenvalue_count(), SpectrumKind::Complex,
                                            derive_seed(seed, 1), kJordanMinGap);
  BaseData base{OrbitKind::General, false, make_jordan(js, spec), general_basis(n), {}, {}};
  if (ev == Eigenvalues::Free) {
    // One shift per eigenvalue, acting on all of its blocks at once.
    std::vector<Eigen::MatrixXcd> shifts(js.eigenvalue_count(), Eigen::MatrixXcd::Zero(n, n));
    for (const auto& block : jordan_layout(js)) {
      shifts[block.eigenvalue] += slot_projector(n, n, block.offset, block.size);
    }
    for (const auto& e : shifts) {
      base.eigen_dirs.push_back(e);
      base.eigen_dirs.push_back(C(0.0, 1.0) * e);
    }
  }
  return base;
}

BaseData singular_base(const SingularProfile& profile, std::uint64_t seed, Eigenvalues ev) {
  const int n = profile.rows();
  const int m = profile.cols();
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(n, m);
  if (profile.distinct_count() > 0) {
    const SpectrumSpec spec = sample_spectrum(profile.distinct_count(),
                                              SpectrumKind::PositiveDecreasing, derive_seed(seed, 1));
    sigma = make_sigma(profile, spec);
  }
  BaseData base{OrbitKind::SingularPair, true, sigma.cast<C>(), widen(skew_symmetric_basis(n)),
                widen(skew_symmetric_basis(m)), {}};
  if (ev == Eigenvalues::Free) {
    int offset = 0;
    for (int k : profile.parts()) {
      base.eigen_dirs.push_back(slot_projector(n, m, offset, k));
      offset += k;
    }
  }
  return base;
}

BaseData make_base(MatrixClass cls, const StratumSpec& spec, std::uint64_t seed, Eigenvalues ev) {
  check_spec_matches(cls, spec);
  if (cls == MatrixClass::JordanForm) return jordan_base(std::get<JordanStructure>(spec), seed, ev);
  if (cls == MatrixClass::SingularValues) {
    return singular_base(std::get<SingularProfile>(spec), seed, ev);
  }
  return eigen_base(cls, std::get<MultiplicityProfile>(spec), seed, ev);
}

// Image of parameter column c in the identity frame.
Eigen::MatrixXcd identity_frame_image(const BaseData& base, Eigen::Index c) {
  const auto nl = static_cast<Eigen::Index>(base.left_dirs.size());
  const auto nr = static_cast<Eigen::Index>(base.right_dirs.size());
  if (c < nl) {
    const auto& x = base.left_dirs[c];
    if (base.orbit == OrbitKind::SingularPair) return x * base.point;
    return x * base.point - base.point * x;
  }
  if (c < nl + nr) return -(base.point * base.right_dirs[c - nl]);
  return base.eigen_dirs[c - nl - nr];
}

void store_column(Eigen::MatrixXd& d, Eigen::Index c, const Eigen::MatrixXcd& image, bool real_image) {
  if (real_image) {
    d.col(c) = image.real().reshaped();
  } else {
    d.col(c) = realify(image);
  }
}

template <class ImageFn>
Eigen::MatrixXd fill_columns(const BaseData& base, ImageFn&& image, bool parallel) {
  const Eigen::Index cols = base.columns();
  Eigen::MatrixXd d(base.rows(), cols);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (Eigen::Index c = 0; c < cols; ++c) store_column(d, c, image(c), base.real_image);
  } else {
    for (Eigen::Index c = 0; c < cols; ++c) store_column(d, c, image(c), base.real_image);
  }
  return d;
}

Eigen::MatrixXd identity_differential(const BaseData& base, bool parallel) {
  return fill_columns(base, [&](Eigen::Index c) { return identity_frame_image(base, c); }, parallel);
}

RankProbe decide(MatrixClass cls, BaseData base, Eigen::MatrixXd d, const RankSettings& settings) {
  RankProbe probe;
  probe.cls = cls;
  probe.parameter_dim = static_cast<int>(d.cols());
  probe.ambient_dim = static_cast<int>(d.rows());
  probe.base_point = std::move(base.point);
  probe.tolerance = settings.tolerance;
  const RankDecision decision = numerical_rank(d, settings);
  probe.differential = std::move(d);
  probe.singular_values = decision.singular_values;
  probe.rank = decision.rank;
  probe.gap_ratio = decision.gap_ratio;
  probe.conclusive = decision.conclusive;
  if (!decision.conclusive) throw InconclusiveRank(decision);
  return probe;
}

Frame random_frame(MatrixClass cls, const StratumSpec& spec, std::uint64_t seed,
                   double condition_cap) {
  const std::uint64_t frame_seed = derive_seed(seed, 2);
  switch (canonical_class(cls)) {
    case MatrixClass::DiagonalizableComplex:
    case MatrixClass::JordanForm: {
      const int n = std::holds_alternative<JordanStructure>(spec)
                        ? std::get<JordanStructure>(spec).order()
                        : std::get<MultiplicityProfile>(spec).order();
      return {random_transform(n, TransformKind::InvertibleComplex, frame_seed, condition_cap), {}};
    }
    case MatrixClass::RealSymmetric: {
      const int n = std::get<MultiplicityProfile>(spec).order();
      return {random_transform(n, TransformKind::Orthogonal, frame_seed), {}};
    }
    case MatrixClass::SingularValues: {
      const auto& p = std::get<SingularProfile>(spec);
      return {random_orthogonal(p.rows(), frame_seed).cast<C>(),
              random_orthogonal(p.cols(), derive_seed(frame_seed, 1)).cast<C>()};
    }
    default: {
      const int n = std::get<MultiplicityProfile>(spec).order();
      return {random_transform(n, TransformKind::Unitary, frame_seed), {}};
    }
  }
}

}  // namespace

void check_spec_matches(MatrixClass cls, const StratumSpec& spec) {
  bool ok = false;
  switch (cls) {
    case MatrixClass::JordanForm:
      ok = std::holds_alternative<JordanStructure>(spec);
      break;
    case MatrixClass::SingularValues:
      ok = std::holds_alternative<SingularProfile>(spec);
      break;
    default:
      ok = std::holds_alternative<MultiplicityProfile>(spec);
      break;
  }
  if (!ok) {
    throw std::invalid_argument(std::string("profile type does not match class ") +
                                std::string(class_name(cls)));
  }
}

long predicted_rank(MatrixClass cls, const StratumSpec& spec, Eigenvalues ev) {
  check_spec_matches(cls, spec);
  if (cls == MatrixClass::JordanForm) {
    return dim_jordan(std::get<JordanStructure>(spec), ev).real_stratum_dim();
  }
  if (cls == MatrixClass::SingularValues) {
    return dim_singular(std::get<SingularProfile>(spec), ev).real_stratum_dim();
  }
  return dimension(cls, std::get<MultiplicityProfile>(spec), ev).real_stratum_dim();
}

RankProbe assemble_differential(MatrixClass cls, const StratumSpec& spec, std::uint64_t base_seed,
                                Eigenvalues ev, const RankSettings& settings) {
  settings.validate();
  BaseData base = make_base(cls, spec, base_seed, ev);
  Eigen::MatrixXd d = identity_differential(base, /*parallel=*/true);
  return decide(cls, std::move(base), std::move(d), settings);
}

Eigen::MatrixXd assemble_differential_serial(MatrixClass cls, const StratumSpec& spec,
                                             std::uint64_t base_seed, Eigenvalues ev) {
  return identity_differential(make_base(cls, spec, base_seed, ev), /*parallel=*/false);
}

Eigen::MatrixXd assemble_differential_matrix(MatrixClass cls, const StratumSpec& spec,
                                             std::uint64_t base_seed, Eigenvalues ev) {
  return identity_differential(make_base(cls, spec, base_seed, ev), /*parallel=*/true);
}

Eigen::MatrixXd framed_differential(MatrixClass cls, const StratumSpec& spec,
                                    std::uint64_t base_seed, Eigenvalues ev, const Frame& frame) {
  const BaseData base = make_base(cls, spec, base_seed, ev);
  const auto nl = static_cast<Eigen::Index>(base.left_dirs.size());
  const auto nr = static_cast<Eigen::Index>(base.right_dirs.size());
  const Eigen::MatrixXcd& t = frame.left;
  const Eigen::MatrixXcd& m = base.point;

  if (base.orbit == OrbitKind::SingularPair) {
    // A = U Sigma V^T with dU = U X, dV = V Y.
    const Eigen::MatrixXcd vt = frame.right.transpose();
    auto image = [&](Eigen::Index c) -> Eigen::MatrixXcd {
      if (c < nl) return (t * base.left_dirs[c]) * m * vt;
      if (c < nl + nr) return t * m * (frame.right * base.right_dirs[c - nl]).transpose();
      return t * base.eigen_dirs[c - nl - nr] * vt;
    };
    return fill_columns(base, image, true);
  }

  if (base.orbit == OrbitKind::General) {
    // A = T M T^{-1}; dA = (dT M - A dT) T^{-1} with dT a unit direction.
    const Eigen::MatrixXcd t_inv = t.inverse();
    const Eigen::MatrixXcd a = t * m * t_inv;
    auto image = [&](Eigen::Index c) -> Eigen::MatrixXcd {
      if (c < nl) {
        const auto& dt = base.left_dirs[c];
        return (dt * m - a * dt) * t_inv;
      }
      return t * base.eigen_dirs[c - nl] * t_inv;
    };
    return fill_columns(base, image, true);
  }

  // A = U M U^*, dU = U X for X in the Lie algebra of U's group.
  const Eigen::MatrixXcd t_adj = t.adjoint();
  auto image = [&](Eigen::Index c) -> Eigen::MatrixXcd {
    if (c < nl) {
      const Eigen::MatrixXcd du = t * base.left_dirs[c];
      return du * m * t_adj + t * m * du.adjoint();
    }
    return t * base.eigen_dirs[c - nl] * t_adj;
  };
  return fill_columns(base, image, true);
}

std::string_view status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass:
      return "PASS";
    case VerdictStatus::Fail:
      return "FAIL";
    case VerdictStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

Verdict verify_class(MatrixClass cls, const StratumSpec& spec, int trials, std::uint64_t seed,
                     Eigenvalues ev, const RankSettings& settings, long predicted_offset) {
  if (trials < 1) throw std::invalid_argument("verify_class: trials must be >= 1");
  Verdict verdict;
  verdict.predicted = predicted_rank(cls, spec, ev) + predicted_offset;
  bool inconclusive = false;
  bool failed = false;
  std::ostringstream detail;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    try {
      const RankProbe probe = assemble_differential(cls, spec, trial_seed, ev, settings);
      verdict.trials.push_back({trial_seed, probe.rank, probe.gap_ratio, true});
      if (probe.rank != verdict.predicted) {
        failed = true;
        detail << "trial " << t << ": rank " << probe.rank << " != " << verdict.predicted << "; ";
      }
    } catch (const InconclusiveRank& e) {
      inconclusive = true;
      verdict.trials.push_back({trial_seed, -1, e.decision().gap_ratio, false});
      detail << "trial " << t << ": " << e.what() << "; ";
    }
  }
  verdict.status = inconclusive ? VerdictStatus::Inconclusive
                   : failed     ? VerdictStatus::Fail
                                : VerdictStatus::Pass;
  verdict.detail = detail.str();
  return verdict;
}

Verdict conjugation_consistency(MatrixClass cls, const StratumSpec& spec, std::uint64_t seed,
                                const RankSettings& settings, double condition_cap) {
  settings.validate();
  Verdict verdict;
  verdict.predicted = predicted_rank(cls, spec, Eigenvalues::Free);

  const Frame frame = random_frame(cls, spec, seed, condition_cap);
  const double kappa = condition_number(frame.left);
  RankSettings framed_settings = settings;
  framed_settings.tolerance = std::min(settings.tolerance * kappa * kappa, 1e-3);

  try {
    const RankProbe identity = assemble_differential(cls, spec, seed, Eigenvalues::Free, settings);
    verdict.trials.push_back({seed, identity.rank, identity.gap_ratio, true});
    const RankDecision framed = numerical_rank(
        framed_differential(cls, spec, seed, Eigenvalues::Free, frame), framed_settings);
    if (!framed.conclusive) throw InconclusiveRank(framed);
    verdict.trials.push_back({seed, framed.rank, framed.gap_ratio, true});
    if (framed.rank != identity.rank) {
      verdict.status = VerdictStatus::Fail;
      verdict.detail = "identity-frame rank " + std::to_string(identity.rank) +
                       " != transformed-frame rank " + std::to_string(framed.rank);
    }
  } catch (const InconclusiveRank& e) {
    verdict.status = VerdictStatus::Inconclusive;
    verdict.detail = e.what();
  }
  return verdict;
}

}  // namespace strata
