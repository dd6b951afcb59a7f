#include "doctest.h"

#include "oracles.hpp"
#include "strata/commutant.hpp"
#include "strata/factory.hpp"
#include "strata/tangent_oracle.hpp"

using namespace strata;

namespace {

const MatrixClass kEigenClasses[] = {MatrixClass::DiagonalizableComplex, MatrixClass::Normal,
                                     MatrixClass::Hermitian, MatrixClass::SkewHermitian,
                                     MatrixClass::Unitary, MatrixClass::RealSymmetric};

// Profiles obtained by splitting one part of `parts` into two positive pieces.
std::vector<Partition> refinements(const Partition& parts) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int a = 1; a < parts[i]; ++a) {
      Partition q = parts;
      q[i] = a;
      q.insert(q.begin() + static_cast<long>(i) + 1, parts[i] - a);
      out.push_back(q);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("parallel and serial assembly agree exactly") {
  const std::vector<std::pair<MatrixClass, StratumSpec>> specs{
      {MatrixClass::DiagonalizableComplex, MultiplicityProfile({2, 1, 1})},
      {MatrixClass::Normal, MultiplicityProfile({2, 2})},
      {MatrixClass::Unitary, MultiplicityProfile({3, 1})},
      {MatrixClass::RealSymmetric, MultiplicityProfile({2, 1})},
      {MatrixClass::JordanForm, JordanStructure({{2, 1}, {1}})},
      {MatrixClass::SingularValues, SingularProfile(3, 4, {2, 1})},
  };
  for (const auto& [cls, spec] : specs) {
    for (auto ev : {Eigenvalues::Free, Eigenvalues::Fixed}) {
      CHECK(assemble_differential_matrix(cls, spec, 17, ev) ==
            assemble_differential_serial(cls, spec, 17, ev));
    }
  }
}

TEST_CASE("differential images stay inside the class") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& parts : enumerate_partitions(n)) {
      const MultiplicityProfile p(parts);
      const std::uint64_t seed = derive_seed(3, n, parts.size());

      const auto herm = assemble_differential(MatrixClass::Hermitian, p, seed);
      for (Eigen::Index c = 0; c < herm.differential.cols(); ++c) {
        const Eigen::MatrixXcd da = unrealify(herm.differential.col(c), n, n);
        CHECK((da - da.adjoint()).norm() < 1e-10);
      }

      const auto skew = assemble_differential(MatrixClass::SkewHermitian, p, seed);
      for (Eigen::Index c = 0; c < skew.differential.cols(); ++c) {
        const Eigen::MatrixXcd da = unrealify(skew.differential.col(c), n, n);
        CHECK((da + da.adjoint()).norm() < 1e-10);
      }

      const auto sym = assemble_differential(MatrixClass::RealSymmetric, p, seed);
      CHECK(sym.differential.rows() == n * n);
      for (Eigen::Index c = 0; c < sym.differential.cols(); ++c) {
        const Eigen::MatrixXd da = sym.differential.col(c).reshaped(n, n);
        CHECK((da - da.transpose()).norm() < 1e-10);
      }

      const auto uni = assemble_differential(MatrixClass::Unitary, p, seed);
      const Eigen::MatrixXcd& u = uni.base_point;
      CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);
      for (Eigen::Index c = 0; c < uni.differential.cols(); ++c) {
        const Eigen::MatrixXcd da = unrealify(uni.differential.col(c), n, n);
        CHECK((da * u.adjoint() + u * da.adjoint()).norm() < 1e-10);
      }
    }
  }
}

TEST_CASE("observed ranks match the formulas on a small sweep") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& parts : enumerate_partitions(n)) {
      const MultiplicityProfile p(parts);
      for (MatrixClass cls : kEigenClasses) {
        for (auto ev : {Eigenvalues::Free, Eigenvalues::Fixed}) {
          const auto probe = assemble_differential(cls, p, derive_seed(n, parts.size()), ev);
          CHECK(probe.rank == predicted_rank(cls, p, ev));
          CHECK(probe.gap_ratio >= 1e4);
        }
      }
    }
  }
}

TEST_CASE("refining a profile never lowers the rank") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& parts : enumerate_partitions(n)) {
      for (MatrixClass cls : kEigenClasses) {
        const int coarse =
            assemble_differential(cls, MultiplicityProfile(parts), derive_seed(1, n)).rank;
        for (const auto& finer : refinements(parts)) {
          const int fine =
              assemble_differential(cls, MultiplicityProfile(finer), derive_seed(2, n)).rank;
          CHECK(fine >= coarse);
        }
      }
    }
  }
}

TEST_CASE("fixed-eigenvalue rank plus commutant nullity fills the group") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& parts : enumerate_partitions(n)) {
      const MultiplicityProfile p(parts);
      const auto probe = assemble_differential(MatrixClass::DiagonalizableComplex, p,
                                               derive_seed(5, n, parts.size()), Eigenvalues::Fixed);
      const int nullity = commutant_dimension(probe.base_point);
      CHECK(nullity == oracle::commutant_nullity(probe.base_point));
      CHECK(probe.rank + 2 * nullity == 2 * n * n);
    }
  }
}

TEST_CASE("jordan and singular-value differentials") {
  for (int n = 2; n <= 6; ++n) {
    const auto single = assemble_differential(MatrixClass::JordanForm, JordanStructure(std::vector<Partition>{{n}}), 9);
    CHECK(single.rank == 2 * (n * n - n + 1));
    const auto scalar =
        assemble_differential(MatrixClass::JordanForm, JordanStructure({Partition(n, 1)}), 9);
    CHECK(scalar.rank == 2);
  }
  const auto zero = assemble_differential(MatrixClass::SingularValues, SingularProfile(3, 2, {}), 1);
  CHECK(zero.rank == 0);
  const auto full =
      assemble_differential(MatrixClass::SingularValues, SingularProfile(3, 4, {1, 1, 1}), 1);
  CHECK(full.rank == 12);
}

TEST_CASE("conjugation does not change the rank") {
  const std::vector<std::pair<MatrixClass, StratumSpec>> specs{
      {MatrixClass::DiagonalizableComplex, MultiplicityProfile({2, 1, 1})},
      {MatrixClass::Normal, MultiplicityProfile({2, 1})},
      {MatrixClass::Hermitian, MultiplicityProfile({3, 1})},
      {MatrixClass::SkewHermitian, MultiplicityProfile({2, 2})},
      {MatrixClass::Unitary, MultiplicityProfile({2, 1, 1})},
      {MatrixClass::RealSymmetric, MultiplicityProfile({2, 2, 1})},
      {MatrixClass::JordanForm, JordanStructure({{2, 1}, {2}})},
      {MatrixClass::SingularValues, SingularProfile(4, 3, {2, 1})},
  };
  for (const auto& [cls, spec] : specs) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto v = conjugation_consistency(cls, spec, seed);
      CAPTURE(class_name(cls));
      CAPTURE(v.detail);
      CHECK(v.status == VerdictStatus::Pass);
    }
  }
}

TEST_CASE("verdicts") {
  const MultiplicityProfile p({2, 1});
  const auto pass = verify_class(MatrixClass::Hermitian, p, 3, 7);
  CHECK(pass.status == VerdictStatus::Pass);
  CHECK(pass.predicted == 6);
  CHECK(pass.trials.size() == 3);

  const auto fail = verify_class(MatrixClass::Hermitian, p, 3, 7, Eigenvalues::Free, {}, 1);
  CHECK(fail.status == VerdictStatus::Fail);

  RankSettings strict;
  strict.gap_requirement = 1e300;
  const auto inconclusive =
      verify_class(MatrixClass::JordanForm, JordanStructure({{2, 1}}), 3, 7, Eigenvalues::Free,
                   strict);
  CHECK(inconclusive.status == VerdictStatus::Inconclusive);

  CHECK_THROWS_AS(check_spec_matches(MatrixClass::JordanForm, p), std::invalid_argument);
  CHECK_THROWS_AS(verify_class(MatrixClass::SingularValues, p, 1, 1), std::invalid_argument);
  CHECK(status_name(VerdictStatus::Inconclusive) == "INCONCLUSIVE");
}

TEST_CASE("repeated unitary orbit singular values are all retained") {
  // Six equal orbit singular values; a divide-and-conquer SVD returned one of
  // them as ~1e-13 at some of these base points.
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto probe =
        assemble_differential(MatrixClass::Unitary, MultiplicityProfile({3, 1}), derive_seed(7, t));
    CHECK(probe.rank == 8);
  }
}
