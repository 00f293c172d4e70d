#include "text_util.hpp"

#include <fstream>
#include <sstream>

namespace negare::detail {

std::vector<NumberedLine> read_resource_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError(LexiconError::Kind::kMissing, path, 0, "cannot open file");

  std::vector<NumberedLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    lines.push_back({number, std::move(line)});
  }
  return lines;
}

std::string read_file(const std::string& path, ErrorCode code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(code, path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string match_case(std::string_view model, std::string_view word) {
  std::string out(word);
  if (model.empty() || out.empty() || !is_upper(model.front())) return out;

  bool all_upper = true;
  std::size_t letters = 0;
  for (char c : model) {
    if (!is_alpha(c)) continue;
    ++letters;
    if (!is_upper(c)) all_upper = false;
  }
  if (all_upper && letters > 1) {
    for (char& c : out) c = ascii_upper(c);
  } else {
    out.front() = ascii_upper(out.front());
  }
  return out;
}

}  // namespace negare::detail
