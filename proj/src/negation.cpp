#include "negare/negation.hpp"

#include <cmath>
#include <stdexcept>

#include "text_util.hpp"

namespace negare {
namespace {

// Polarity distances closer than this are treated as ties.
constexpr double kTieTolerance = 1e-12;

}  // namespace

std::string_view to_string(Edit::Kind kind) {
  return kind == Edit::Kind::kCueRemoved ? "cue_removed" : "word_replaced";
}

bool passes_pos_gate(std::string_view tag) {
  return tag == "JJ" || tag == "VBG" || tag == "VBN";
}

std::vector<CueMatch> detect_negations(const Sentence& sentence, const LexiconStore& lexicons) {
  std::vector<CueMatch> matches;
  for (const auto& token : sentence.tokens)
    if (lexicons.is_cue(token.norm)) matches.push_back({token.index, token.norm});
  return matches;
}

double antonym_mean_polarity(std::string_view word, const LexiconStore& lexicons) {
  auto antonyms = lexicons.get_antonyms(word);
  if (antonyms.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& a : antonyms) sum += lexicons.polarity_of(a);
  return sum / static_cast<double>(antonyms.size());
}

std::optional<std::string> select_antonym(std::string_view word, const LexiconStore& lexicons) {
  auto antonyms = lexicons.get_antonyms(word);
  if (antonyms.empty()) return std::nullopt;

  double sum = 0.0;
  for (const auto& a : antonyms) sum += lexicons.polarity_of(a);
  const double mean = sum / static_cast<double>(antonyms.size());

  std::size_t best = 0;
  double best_distance = std::abs(lexicons.polarity_of(antonyms[0]) - mean);
  for (std::size_t i = 1; i < antonyms.size(); ++i) {
    double distance = std::abs(lexicons.polarity_of(antonyms[i]) - mean);
    if (distance < best_distance - kTieTolerance) {
      best = i;
      best_distance = distance;
    }
  }
  return antonyms[best];
}

TransformResult resolve_negation(const Sentence& sentence, const LexiconStore& lexicons) {
  for (const auto& token : sentence.tokens)
    if (!token.tagged())
      throw std::invalid_argument("resolve_negation: token '" + token.surface + "' is untagged");

  TransformResult result;
  result.original = sentence;

  const auto& tokens = sentence.tokens;
  std::vector<bool> removed(tokens.size(), false);
  std::vector<std::optional<std::string>> replacement(tokens.size());

  // Decisions use the original indices; rewriting happens afterwards.
  for (const CueMatch& cue : detect_negations(sentence, lexicons)) {
    const std::size_t target = cue.index + 1;
    std::optional<std::string> antonym;
    if (target < tokens.size() && !lexicons.is_cue(tokens[target].norm) &&
        passes_pos_gate(tokens[target].tag))
      antonym = select_antonym(tokens[target].norm, lexicons);

    if (!antonym) {
      result.cues_kept.push_back(cue);
      continue;
    }
    removed[cue.index] = true;
    std::string surface = detail::match_case(tokens[target].surface, *antonym);
    // A capitalized sentence-initial cue hands its capital to the word that
    // now starts the sentence.
    if (cue.index == 0 && !tokens[cue.index].surface.empty() &&
        detail::is_upper(tokens[cue.index].surface.front()))
      surface.front() = detail::ascii_upper(surface.front());
    replacement[target] = surface;

    result.edits.push_back({Edit::Kind::kCueRemoved, cue.index, tokens[cue.index].surface, ""});
    result.edits.push_back({Edit::Kind::kWordReplaced, target, tokens[target].surface, surface});
  }

  if (result.edits.empty()) {
    result.transformed = sentence;
    return result;
  }

  std::vector<Token> out;
  out.reserve(tokens.size());
  bool carry_joined = false;
  bool pending_carry = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (removed[i]) {
      // The next token takes over the removed cue's spacing.
      carry_joined = tokens[i].joined;
      pending_carry = true;
      continue;
    }
    Token token = tokens[i];
    if (replacement[i]) {
      token.surface = *replacement[i];
      token.norm = detail::to_lower(token.surface);
    }
    if (pending_carry) {
      token.joined = carry_joined;
      pending_carry = false;
    }
    out.push_back(std::move(token));
  }
  result.transformed = rebuild(std::move(out));
  return result;
}

}  // namespace negare
