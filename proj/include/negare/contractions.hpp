#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace negare {

// Contraction surface form -> expanded form ("won't" -> "will not").
// Keys are stored lowercase and looked up as whole words; expansions never
// contain an apostrophe and never contain a key, so expanding twice is the
// same as expanding once.
class ContractionTable {
 public:
  using Entry = std::pair<std::string, std::string>;

  ContractionTable() = default;

  // Throws std::invalid_argument when an entry breaks the table invariants.
  explicit ContractionTable(std::vector<Entry> entries);

  // Reads a `contraction<TAB>expansion` TSV file. Throws FileError.
  static ContractionTable load(const std::string& path);

  // won't, can't, shan't, ain't and cannot.
  static const ContractionTable& builtin();

  std::optional<std::string_view> find(std::string_view lowercase_key) const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace negare
