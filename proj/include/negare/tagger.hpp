#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "negare/normalize.hpp"

namespace negare {

// True for the Penn Treebank tagset, punctuation tags included.
bool is_valid_ptb_tag(std::string_view tag);

// word -> most frequent tag, plus suffix rules for words it does not know.
class TagLexicon {
 public:
  using SuffixRule = std::pair<std::string, std::string>;

  TagLexicon();  // empty word map, default suffix rules
  TagLexicon(std::unordered_map<std::string, std::string> entries,
             std::vector<SuffixRule> suffix_rules, std::string default_tag = "NN");

  // `word<TAB>tag` TSV. Throws LexiconError on bad columns or unknown tags.
  static TagLexicon load(const std::filesystem::path& path);

  // ing->VBG, ed->VBN, ly->RB, ous/ful/able/less/ive/y->JJ.
  static const std::vector<SuffixRule>& default_suffix_rules();

  const std::string* find(std::string_view lowercase_word) const;
  // Longest matching suffix rule, or nullptr.
  const std::string* match_suffix(std::string_view lowercase_word) const;

  const std::string& default_tag() const noexcept { return default_tag_; }
  const std::unordered_map<std::string, std::string>& entries() const noexcept { return entries_; }
  const std::vector<SuffixRule>& suffix_rules() const noexcept { return suffix_rules_; }

 private:
  std::unordered_map<std::string, std::string> entries_;
  std::vector<SuffixRule> suffix_rules_;  // longest suffix first
  std::string default_tag_;
};

// Fills in missing tags. Tags already on a token (from pre-tagged input) are
// kept.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual void tag(Sentence& sentence) const = 0;

  Sentence tag_tokens(Sentence sentence) const {
    tag(sentence);
    return sentence;
  }
  std::vector<Sentence> tag_corpus(std::vector<Sentence> sentences) const {
    for (auto& s : sentences) tag(s);
    return sentences;
  }
};

// Context-free tagger: exact lexicon match, then NNP for capitalized
// non-initial words, then suffix rules, then the default tag. Single
// punctuation tokens get their own Penn tag.
class LexiconTagger final : public Tagger {
 public:
  explicit LexiconTagger(TagLexicon lexicon = {}) : lexicon_(std::move(lexicon)) {}

  void tag(Sentence& sentence) const override;
  std::string tag_word(const Token& token) const;

  const TagLexicon& lexicon() const noexcept { return lexicon_; }

 private:
  TagLexicon lexicon_;
};

// Two-column `surface<TAB>tag` file, blank line between sentences. Throws
// FileError(kParse) on malformed lines.
std::vector<Sentence> read_pretagged(const std::filesystem::path& path);
std::vector<Sentence> parse_pretagged(std::string_view text, const std::string& origin = "<input>");

}  // namespace negare
