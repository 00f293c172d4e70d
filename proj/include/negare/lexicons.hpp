#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "negare/contractions.hpp"

namespace negare {

// An antonym with the dictionary source that supplied it.
struct AntonymHit {
  std::string antonym;
  std::string source;

  bool operator==(const AntonymHit&) const = default;
};

// Locations of the resource files. Antonym files are read in order; a
// source's position is fixed by the first row that names it.
struct LexiconPaths {
  std::vector<std::filesystem::path> antonyms;
  std::filesystem::path sentiment;
  std::optional<std::filesystem::path> synonyms;
  std::optional<std::filesystem::path> cues;
  std::optional<std::filesystem::path> contractions;

  // `antonyms*.tsv` (sorted by name) and `sentiment.tsv` are required;
  // `synonyms.tsv`, `cues.txt` and `contractions.tsv` are picked up when
  // present. Throws FileError(kLexicon) when the directory or a required
  // file is missing.
  static LexiconPaths from_directory(const std::filesystem::path& dir);
};

struct LexiconOptions {
  // Only the first listed synonym is tried when a word has no antonyms of
  // its own. Off by default: synonyms are tried in order until one has
  // antonyms.
  bool strict_first_synonym = false;
};

// Immutable after load; all queries take lowercase words and are safe to
// call concurrently.
class LexiconStore {
 public:
  static LexiconStore load(const LexiconPaths& paths, LexiconOptions options = {});
  static LexiconStore load_directory(const std::filesystem::path& dir,
                                     LexiconOptions options = {});

  // Source ids in load order.
  const std::vector<std::string>& sources() const noexcept { return sources_; }
  // Number of antonym rows contributed by each source, parallel to sources().
  const std::vector<std::size_t>& source_row_counts() const noexcept { return source_rows_; }

  // Source-major union of every source's list; duplicates keep their first
  // occurrence.
  std::vector<AntonymHit> lookup_antonyms(std::string_view word) const;
  const std::vector<std::string>& lookup_synonyms(std::string_view word) const;
  // Direct antonyms, or else the antonyms reached through a synonym. Never
  // contains `word` itself.
  std::vector<std::string> get_antonyms(std::string_view word) const;

  // 0.0 for words the sentiment lexicon does not know.
  double polarity_of(std::string_view word) const;
  bool has_polarity(std::string_view word) const;

  bool is_cue(std::string_view word) const;
  const std::vector<std::string>& cues() const noexcept { return cue_list_; }

  const ContractionTable& contractions() const noexcept { return contractions_; }
  const LexiconOptions& options() const noexcept { return options_; }

  std::size_t antonym_headword_count() const noexcept { return antonyms_.size(); }
  std::size_t synonym_headword_count() const noexcept { return synonyms_.size(); }
  std::size_t sentiment_entry_count() const noexcept { return polarity_.size(); }

  std::vector<std::string> antonym_headwords() const;
  std::vector<std::string> synonym_headwords() const;
  std::vector<std::string> sentiment_words() const;

  static const std::vector<std::string>& default_cues();

 private:
  struct SourceList {
    std::size_t source;
    std::vector<std::string> words;
  };

  LexiconOptions options_;
  std::vector<std::string> sources_;
  std::vector<std::size_t> source_rows_;
  // Per headword, lists ordered by source index.
  std::unordered_map<std::string, std::vector<SourceList>> antonyms_;
  std::unordered_map<std::string, std::vector<std::string>> synonyms_;
  std::unordered_map<std::string, double> polarity_;
  std::vector<std::string> cue_list_;
  std::unordered_set<std::string> cue_set_;
  ContractionTable contractions_;
};

}  // namespace negare
