#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negare/lexicons.hpp"
#include "negare/normalize.hpp"

namespace negare {

struct CueMatch {
  std::size_t index = 0;
  std::string cue;

  bool operator==(const CueMatch&) const = default;
};

struct Edit {
  enum class Kind { kCueRemoved, kWordReplaced };

  Kind kind = Kind::kCueRemoved;
  std::size_t position = 0;  // index in the original sentence
  std::string before;
  std::string after;  // empty for kCueRemoved

  bool operator==(const Edit&) const = default;
};

std::string_view to_string(Edit::Kind kind);

struct TransformResult {
  Sentence original;
  Sentence transformed;
  std::vector<Edit> edits;
  std::vector<CueMatch> cues_kept;

  bool changed() const noexcept { return !edits.empty(); }
};

// Tags whose words may be replaced by an antonym: adjectives, gerunds and
// past participles.
bool passes_pos_gate(std::string_view tag);

std::vector<CueMatch> detect_negations(const Sentence& sentence, const LexiconStore& lexicons);

// Mean polarity over the distinct antonyms of `word`; 0.0 when it has none.
double antonym_mean_polarity(std::string_view word, const LexiconStore& lexicons);

// The antonym whose polarity is closest to antonym_mean_polarity(word);
// ties go to the earlier candidate.
std::optional<std::string> select_antonym(std::string_view word, const LexiconStore& lexicons);

// For each cue, the token right after it is replaced by an antonym and the
// cue dropped when that token's tag passes the POS gate and an antonym
// exists. Otherwise the cue is kept. Every token must already be tagged.
TransformResult resolve_negation(const Sentence& sentence, const LexiconStore& lexicons);

}  // namespace negare
