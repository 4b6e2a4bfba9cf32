#pragma once

#include "ztile/integer_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ztile {

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "{0, 2, -5}", "0 2 -5", "0,2,-5" and the like. Duplicates are errors.
inline IntegerSet parse_set(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  bool braced = false;
  if (pos < text.size() && text[pos] == '{') {
    braced = true;
    ++pos;
  }
  std::vector<std::int64_t> values;
  bool expect_value = true;  // no separator may precede the first value
  for (;;) {
    skip_space();
    if (pos == text.size()) break;
    const char ch = text[pos];
    if (ch == '}') break;
    if (ch == ',') {
      if (expect_value) throw parse_error("unexpected ',' at offset " + std::to_string(pos));
      expect_value = true;
      ++pos;
      continue;
    }
    std::int64_t value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) throw parse_error("integer out of range at offset " + std::to_string(pos));
    if (ec != std::errc{} || ptr == begin)
      throw parse_error(std::string("unexpected character '") + ch + "' at offset " + std::to_string(pos));
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    expect_value = false;
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',' &&
        text[pos] != '}')
      throw parse_error(std::string("unexpected character '") + text[pos] + "' at offset " + std::to_string(pos));
  }
  if (!values.empty() && expect_value) throw parse_error("trailing ','");
  if (braced) {
    if (pos == text.size()) throw parse_error("missing closing '}'");
    ++pos;
  } else if (pos < text.size()) {
    throw parse_error("unbalanced '}'");
  }
  skip_space();
  if (pos != text.size()) throw parse_error("trailing characters after '}'");

  std::vector<std::int64_t> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
    throw parse_error("duplicate element " + std::to_string(*dup));
  try {
    return IntegerSet(std::move(values));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

inline IntegerSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read set file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_set(buffer.str());
}

/// "{a,b,c}" in ascending order; parse_set reads it back unchanged.
inline std::string format_set(const IntegerSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& out, const IntegerSet& set) { return out << format_set(set); }

}  // namespace ztile
