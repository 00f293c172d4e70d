#include "negare/sentiment.hpp"

#include "negare/negation.hpp"

namespace negare {
namespace {

TextScore mean_score(const Sentence& sentence, bool invert_after_cue, const LexiconStore& lexicons) {
  double sum = 0.0;
  std::size_t matched = 0;
  bool invert = false;
  for (const auto& token : sentence.tokens) {
    if (lexicons.is_cue(token.norm)) {
      invert = invert_after_cue;
      continue;
    }
    if (lexicons.has_polarity(token.norm)) {
      double p = lexicons.polarity_of(token.norm);
      sum += invert ? -p : p;
      ++matched;
    }
    invert = false;
  }
  TextScore score;
  score.matched = matched;
  score.value = matched == 0 ? 0.0 : sum / static_cast<double>(matched);
  return score;
}

}  // namespace

std::string_view to_string(ScoreMode mode) {
  switch (mode) {
    case ScoreMode::kPlain:
      return "plain";
    case ScoreMode::kInvertNext:
      return "invert_next";
    case ScoreMode::kAntonymize:
      return "antonymize";
  }
  return "plain";
}

std::optional<ScoreMode> parse_score_mode(std::string_view name) {
  if (name == "plain") return ScoreMode::kPlain;
  if (name == "invert_next" || name == "invert-next") return ScoreMode::kInvertNext;
  if (name == "antonymize") return ScoreMode::kAntonymize;
  return std::nullopt;
}

TextScore score_sentence(const Sentence& sentence, ScoreMode mode, const LexiconStore& lexicons) {
  TextScore score;
  switch (mode) {
    case ScoreMode::kPlain:
      score = mean_score(sentence, false, lexicons);
      break;
    case ScoreMode::kInvertNext:
      score = mean_score(sentence, true, lexicons);
      break;
    case ScoreMode::kAntonymize:
      score = mean_score(resolve_negation(sentence, lexicons).transformed, false, lexicons);
      break;
  }
  score.mode = mode;
  return score;
}

std::vector<TextScore> score_corpus(const std::vector<Sentence>& sentences, ScoreMode mode,
                                    const LexiconStore& lexicons) {
  std::vector<TextScore> scores;
  scores.reserve(sentences.size());
  for (const auto& s : sentences) scores.push_back(score_sentence(s, mode, lexicons));
  return scores;
}

}  // namespace negare
