#include "negare/contractions.hpp"

#include <stdexcept>

#include "negare/error.hpp"
#include "text_util.hpp"

namespace negare {
namespace {

// Empty string when valid, otherwise the reason.
std::string check_key(std::string_view key) {
  if (key.empty()) return "empty contraction";
  for (char c : key)
    if (!detail::is_word_char(c)) return "contraction '" + std::string(key) + "' is not a single word";
  if (key.front() == '\'' || key.back() == '\'')
    return "contraction '" + std::string(key) + "' starts or ends with an apostrophe";
  return {};
}

}  // namespace

ContractionTable::ContractionTable(std::vector<Entry> entries) {
  for (auto& [key, expansion] : entries) {
    key = detail::to_lower(key);
    if (std::string reason = check_key(key); !reason.empty())
      throw std::invalid_argument(reason);
    if (detail::trim(expansion).empty())
      throw std::invalid_argument("empty expansion for '" + key + "'");
    if (expansion.find('\'') != std::string::npos)
      throw std::invalid_argument("expansion of '" + key + "' contains an apostrophe");
    if (!index_.emplace(key, entries_.size()).second)
      throw std::invalid_argument("duplicate contraction '" + key + "'");
    entries_.emplace_back(key, std::string(detail::trim(expansion)));
  }
  // An expansion that contains a key would be expanded again on a second
  // pass.
  for (const auto& [key, expansion] : entries_) {
    for (std::string_view word : detail::split(expansion, ' ')) {
      if (index_.count(detail::to_lower(word)))
        throw std::invalid_argument("expansion of '" + key + "' contains contraction '" +
                                    std::string(word) + "'");
    }
  }
}

ContractionTable ContractionTable::load(const std::string& path) {
  std::vector<Entry> entries;
  for (auto& line : detail::read_resource_lines(path)) {
    auto cols = detail::split(line.text, '\t');
    if (cols.size() != 2)
      throw FileError(ErrorCode::kLexicon, path, line.number,
                      "expected 2 tab-separated columns, got " + std::to_string(cols.size()));
    entries.emplace_back(std::string(detail::trim(cols[0])), std::string(cols[1]));
  }
  try {
    return ContractionTable(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw FileError(ErrorCode::kLexicon, path, 0, e.what());
  }
}

const ContractionTable& ContractionTable::builtin() {
  static const ContractionTable table({
      {"won't", "will not"},
      {"can't", "can not"},
      {"shan't", "shall not"},
      {"ain't", "is not"},
      {"cannot", "can not"},
  });
  return table;
}

std::optional<std::string_view> ContractionTable::find(std::string_view lowercase_key) const {
  auto it = index_.find(std::string(lowercase_key));
  if (it == index_.end()) return std::nullopt;
  return std::string_view(entries_[it->second].second);
}

}  // namespace negare
