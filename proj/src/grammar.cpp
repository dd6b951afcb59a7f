#include "strata/grammar.hpp"

#include <cctype>
#include <set>

namespace strata {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " +
                            message),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t position() const { return pos_; }

  int positive_int() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a positive integer");
    if (value < 1) throw ParseError(start, "expected a positive integer, got 0");
    return static_cast<int>(value);
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
          c == '+') {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected an eigenvalue label");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    const std::string found =
        pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : std::string("end of input");
    throw ParseError(pos_, message + ", found " + found);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Partition int_list(Cursor& cur) {
  Partition parts{cur.positive_int()};
  while (cur.accept(',')) parts.push_back(cur.positive_int());
  return parts;
}

}  // namespace

MultiplicityProfile parse_profile(std::string_view text) {
  Cursor cur(text);
  Partition parts = int_list(cur);
  if (!cur.at_end()) cur.fail("expected ',' or end of input");
  return MultiplicityProfile(std::move(parts));
}

JordanStructure parse_jordan(std::string_view text) {
  Cursor cur(text);
  std::vector<Partition> groups;
  std::set<std::string> labels;
  do {
    const std::size_t label_pos = (cur.skip_space(), cur.position());
    std::string label = cur.label();
    if (!labels.insert(label).second) {
      throw ParseError(label_pos, "duplicate eigenvalue label '" + label + "'");
    }
    cur.expect(':');
    Partition sizes{cur.positive_int()};
    while (cur.accept(',')) {
      const std::size_t size_pos = (cur.skip_space(), cur.position());
      const int k = cur.positive_int();
      if (k > sizes.back()) {
        throw ParseError(size_pos, "block sizes must be weakly decreasing");
      }
      sizes.push_back(k);
    }
    groups.push_back(std::move(sizes));
  } while (cur.accept(';'));
  if (!cur.at_end()) cur.fail("expected ';' or end of input");
  return JordanStructure(std::move(groups));
}

SingularProfile parse_singular(std::string_view text) {
  Cursor cur(text);
  const int n = cur.positive_int();
  if (!cur.accept('x') && !cur.accept('X')) cur.fail("expected 'x'");
  const int m = cur.positive_int();
  cur.expect(':');
  Partition parts;
  if (!cur.at_end()) parts = int_list(cur);
  if (!cur.at_end()) cur.fail("expected ',' or end of input");
  return SingularProfile(n, m, std::move(parts));
}

std::string format_parts(std::span<const int> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

std::string format_profile(const MultiplicityProfile& profile) {
  return format_parts(profile.parts());
}

std::string format_jordan(const JordanStructure& js) {
  std::string out;
  for (int a = 0; a < js.eigenvalue_count(); ++a) {
    if (a) out += "; ";
    out += std::to_string(a) + ":" + format_parts(js.blocks(a));
  }
  return out;
}

std::string format_singular(const SingularProfile& profile) {
  return std::to_string(profile.rows()) + "x" + std::to_string(profile.cols()) + ":" +
         format_parts(profile.parts());
}

}  // namespace strata
