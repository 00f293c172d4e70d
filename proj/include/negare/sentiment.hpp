#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "negare/lexicons.hpp"
#include "negare/normalize.hpp"

namespace negare {

enum class ScoreMode {
  kPlain,       // cues ignored
  kInvertNext,  // the word after a cue has its polarity negated
  kAntonymize,  // negations resolved by antonym substitution first
};

std::string_view to_string(ScoreMode mode);
std::optional<ScoreMode> parse_score_mode(std::string_view name);

struct TextScore {
  double value = 0.0;       // mean polarity over matched tokens, in [-1, 1]
  std::size_t matched = 0;  // tokens found in the sentiment lexicon
  ScoreMode mode = ScoreMode::kPlain;
};

// Mean of the lexicon polarities of the non-cue tokens the lexicon knows.
// kAntonymize requires a tagged sentence.
TextScore score_sentence(const Sentence& sentence, ScoreMode mode, const LexiconStore& lexicons);

std::vector<TextScore> score_corpus(const std::vector<Sentence>& sentences, ScoreMode mode,
                                    const LexiconStore& lexicons);

}  // namespace negare
