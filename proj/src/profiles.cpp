#include "strata/profiles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace strata {

namespace {

int checked_sum(std::span<const int> parts, const char* what) {
  long total = 0;
  for (int k : parts) {
    if (k < 1) {
      throw std::invalid_argument(std::string(what) + ": every part must be >= 1, got " +
                                  std::to_string(k));
    }
    total += k;
  }
  return static_cast<int>(total);
}

bool weakly_decreasing(std::span<const int> parts) {
  return std::is_sorted(parts.begin(), parts.end(), std::greater<>());
}

}  // namespace

MultiplicityProfile::MultiplicityProfile(Partition parts) : n_(0), parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("multiplicity profile: needs at least one eigenvalue");
  }
  n_ = checked_sum(parts_, "multiplicity profile");
}

MultiplicityProfile::MultiplicityProfile(int n, Partition parts)
    : MultiplicityProfile(std::move(parts)) {
  if (n_ != n) {
    throw std::invalid_argument("multiplicity profile: parts sum to " + std::to_string(n_) +
                                " but n = " + std::to_string(n));
  }
}

JordanStructure::JordanStructure(std::vector<Partition> blocks) : n_(0), blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw std::invalid_argument("jordan structure: needs at least one eigenvalue");
  }
  for (const auto& p : blocks_) {
    if (p.empty()) {
      throw std::invalid_argument("jordan structure: every eigenvalue needs at least one block");
    }
    if (!weakly_decreasing(p)) {
      throw std::invalid_argument("jordan structure: block sizes must be weakly decreasing");
    }
    n_ += checked_sum(p, "jordan structure");
  }
}

JordanStructure::JordanStructure(int n, std::vector<Partition> blocks)
    : JordanStructure(std::move(blocks)) {
  if (n_ != n) {
    throw std::invalid_argument("jordan structure: blocks sum to " + std::to_string(n_) +
                                " but n = " + std::to_string(n));
  }
}

int JordanStructure::multiplicity(int a) const {
  const auto& p = blocks_.at(a);
  return std::accumulate(p.begin(), p.end(), 0);
}

int JordanStructure::max_block_count() const {
  std::size_t best = 0;
  for (const auto& p : blocks_) best = std::max(best, p.size());
  return static_cast<int>(best);
}

SingularProfile::SingularProfile(int rows, int cols, Partition parts)
    : n_(rows), m_(cols), r_(0), parts_(std::move(parts)) {
  if (n_ < 1 || m_ < 1) {
    throw std::invalid_argument("singular profile: shape must be positive, got " +
                                std::to_string(n_) + "x" + std::to_string(m_));
  }
  r_ = checked_sum(parts_, "singular profile");
  if (r_ > std::min(n_, m_)) {
    throw std::invalid_argument("singular profile: rank " + std::to_string(r_) +
                                " exceeds min(n, m) = " + std::to_string(std::min(n_, m_)));
  }
}

Partition sorted_parts(const MultiplicityProfile& profile) {
  Partition out(profile.parts().begin(), profile.parts().end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Partition invariant_degrees(const JordanStructure& js) {
  Partition m(js.max_block_count(), 0);
  for (const auto& p : js.all_blocks()) {
    for (std::size_t j = 0; j < p.size(); ++j) m[j] += p[j];
  }
  return m;
}

long pairwise_min_sum(std::span<const int> partition) {
  long total = 0;
  for (int a : partition) {
    for (int b : partition) total += std::min(a, b);
  }
  return total;
}

long weighted_degree_sum(std::span<const int> partition) {
  if (!weakly_decreasing(partition)) {
    throw std::invalid_argument("weighted_degree_sum: partition must be weakly decreasing");
  }
  long total = 0;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    total += static_cast<long>(2 * j + 1) * partition[j];
  }
  return total;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> recurse = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int k = std::min(remaining, cap); k >= 1; --k) {
      current.push_back(k);
      recurse(remaining - k, k);
      current.pop_back();
    }
  };
  recurse(n, n);
  return out;
}

std::vector<JordanStructure> enumerate_jordan_structures(int n, int max_p) {
  if (n < 1) throw std::invalid_argument("enumerate_jordan_structures: n must be >= 1");
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (int k = 1; k <= n; ++k) by_size[k] = enumerate_partitions(k);

  std::vector<JordanStructure> out;
  std::vector<Partition> groups;
  // Place one eigenvalue group at a time; groups.size() is the eigenvalue count so far.
  std::function<void(int, int)> recurse = [&](int remaining, int p_target) {
    if (static_cast<int>(groups.size()) == p_target) {
      if (remaining == 0) out.emplace_back(n, groups);
      return;
    }
    const int slots_left = p_target - static_cast<int>(groups.size());
    for (int size = remaining - (slots_left - 1); size >= 1; --size) {
      for (const auto& part : by_size[size]) {
        groups.push_back(part);
        recurse(remaining - size, p_target);
        groups.pop_back();
      }
    }
  };
  for (int p = 1; p <= std::min(n, max_p); ++p) recurse(n, p);
  return out;
}

std::vector<SingularProfile> enumerate_singular_profiles(int max_n, int max_m) {
  std::vector<SingularProfile> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= max_m; ++m) {
      for (int r = 0; r <= std::min(n, m); ++r) {
        for (auto& part : enumerate_partitions(r)) out.emplace_back(n, m, std::move(part));
      }
    }
  }
  return out;
}

}  // namespace strata
