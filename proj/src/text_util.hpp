#pragma once

// Internal string helpers shared by the loaders and the tokenizer.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "negare/error.hpp"

namespace negare::detail {

inline char ascii_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

inline char ascii_upper(char c) {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline bool is_upper(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0;
}

inline bool is_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

// Letters, digits, apostrophes and any non-ASCII byte (so UTF-8 letters stay
// inside words).
inline bool is_word_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || c == '\'' || u >= 0x80;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline bool has_whitespace(std::string_view s) {
  for (char c : s)
    if (is_space(c)) return true;
  return false;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Lines of a resource file with their 1-based numbers. Blank lines and lines
// whose first non-space character is '#' are dropped; a trailing '\r' is
// stripped.
struct NumberedLine {
  std::size_t number;
  std::string text;
};

std::vector<NumberedLine> read_resource_lines(const std::string& path);

// Whole file contents; throws FileError(kIo) when unreadable.
std::string read_file(const std::string& path, ErrorCode code = ErrorCode::kIo);

// Copies the capitalization pattern of `model` onto `word`: all-caps stays
// all-caps, a leading capital stays a leading capital.
std::string match_case(std::string_view model, std::string_view word);

}  // namespace negare::detail
