#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "strata/profiles.hpp"

namespace strata {

/// Text forms used on the command line and in reports:
///   multiplicities   "2,1,1"
///   Jordan           "label:sizes; label:sizes"   e.g. "0:3,1; 1:2"
///   singular values  "n x m : k1,k2,..."          e.g. "3x4:2,1", "3x4:" for rank 0
/// Whitespace around tokens is ignored.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message);
  /// 0-based offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

MultiplicityProfile parse_profile(std::string_view text);
JordanStructure parse_jordan(std::string_view text);
SingularProfile parse_singular(std::string_view text);

std::string format_parts(std::span<const int> parts);
std::string format_profile(const MultiplicityProfile& profile);
/// Eigenvalues are labelled 0, 1, ... in structure order.
std::string format_jordan(const JordanStructure& js);
std::string format_singular(const SingularProfile& profile);

}  // namespace strata
