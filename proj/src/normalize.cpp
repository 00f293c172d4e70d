#include "negare/normalize.hpp"

#include "text_util.hpp"

namespace negare {
namespace {

constexpr std::string_view kDetachable = ".,!?;";

std::size_t find_nt(std::string_view word) {
  for (std::size_t i = 0; i + 3 <= word.size(); ++i) {
    if (detail::ascii_lower(word[i]) == 'n' && word[i + 1] == '\'' &&
        detail::ascii_lower(word[i + 2]) == 't')
      return i;
  }
  return std::string_view::npos;
}

std::string expand_run(std::string_view word, const ContractionTable& table);

std::string expand_word(std::string_view word, const ContractionTable& table) {
  if (auto expansion = table.find(detail::to_lower(word)))
    return detail::match_case(word, *expansion);

  std::size_t pos = find_nt(word);
  if (pos == std::string_view::npos) return std::string(word);

  std::string_view before = word.substr(0, pos);
  std::string_view after = word.substr(pos + 3);
  bool upper = detail::is_upper(word[pos]) && detail::is_upper(word[pos + 2]);

  std::string out;
  if (!before.empty()) out += expand_run(before, table) + " ";
  out += upper ? "NOT" : "not";
  if (!after.empty()) out += " " + expand_run(after, table);
  return out;
}

// Quote marks around a word are not part of it.
std::string expand_run(std::string_view word, const ContractionTable& table) {
  std::size_t lead = 0;
  while (lead < word.size() && word[lead] == '\'') ++lead;
  std::size_t trail = word.size();
  while (trail > lead && word[trail - 1] == '\'') --trail;

  std::string out(word.substr(0, lead));
  if (trail > lead) out += expand_word(word.substr(lead, trail - lead), table);
  out += word.substr(trail);
  return out;
}

}  // namespace

Token make_token(std::string surface, std::size_t index, bool joined) {
  Token token;
  token.norm = detail::to_lower(surface);
  token.surface = std::move(surface);
  token.index = index;
  token.joined = joined;
  return token;
}

std::string decontract(std::string_view text, const ContractionTable& table) {
  std::string out;
  out.reserve(text.size() + 8);
  std::size_t i = 0;
  while (i < text.size()) {
    if (!detail::is_word_char(text[i])) {
      out += text[i++];
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && detail::is_word_char(text[end])) ++end;
    out += expand_run(text.substr(i, end - i), table);
    i = end;
  }
  return out;
}

bool is_punctuation_token(std::string_view surface) {
  return surface.size() == 1 && kDetachable.find(surface.front()) != std::string_view::npos;
}

Sentence tokenize(std::string_view text) {
  Sentence sentence;
  sentence.raw = std::string(text);

  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && detail::is_space(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t end = i;
    while (end < text.size() && !detail::is_space(text[end])) ++end;
    std::string_view chunk = text.substr(i, end - i);
    i = end;

    std::size_t core = chunk.size();
    while (core > 0 && kDetachable.find(chunk[core - 1]) != std::string_view::npos) --core;

    bool joined = false;
    if (core > 0) {
      sentence.tokens.push_back(
          make_token(std::string(chunk.substr(0, core)), sentence.tokens.size()));
      joined = true;
    }
    for (std::size_t p = core; p < chunk.size(); ++p) {
      sentence.tokens.push_back(
          make_token(std::string(1, chunk[p]), sentence.tokens.size(), joined));
      joined = true;
    }
  }
  return sentence;
}

std::string render(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !tokens[i].joined) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

Sentence rebuild(std::vector<Token> tokens) {
  Sentence sentence;
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].index = i;
  if (!tokens.empty()) tokens.front().joined = false;
  sentence.raw = render(tokens);
  sentence.tokens = std::move(tokens);
  return sentence;
}

}  // namespace negare
