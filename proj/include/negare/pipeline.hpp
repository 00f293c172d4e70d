#pragma once

#include <filesystem>
#include <string_view>

#include "negare/lexicons.hpp"
#include "negare/negation.hpp"
#include "negare/sentiment.hpp"
#include "negare/tagger.hpp"

namespace negare {

// Lexicons plus tagger: decontract -> tokenize -> tag -> resolve. Immutable
// once built, so one instance can serve any number of threads.
class Pipeline {
 public:
  Pipeline(LexiconStore lexicons, LexiconTagger tagger)
      : lexicons_(std::move(lexicons)), tagger_(std::move(tagger)) {}

  // Loads the lexicon directory; `tags.tsv` there, when present, feeds the
  // tagger.
  static Pipeline open(const std::filesystem::path& lexicon_dir, LexiconOptions options = {});

  // Decontracted, tokenized and tagged.
  Sentence prepare(std::string_view text) const;

  TransformResult transform(std::string_view text) const;
  TextScore score(std::string_view text, ScoreMode mode) const;

  const LexiconStore& lexicons() const noexcept { return lexicons_; }
  const LexiconTagger& tagger() const noexcept { return tagger_; }

 private:
  LexiconStore lexicons_;
  LexiconTagger tagger_;
};

}  // namespace negare
