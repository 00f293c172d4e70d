#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negare/contractions.hpp"

namespace negare {

struct Token {
  std::string surface;
  // Lowercase shadow of `surface`, used for every lexicon lookup.
  std::string norm;
  std::size_t index = 0;
  // Penn Treebank tag, empty until tagged.
  std::string tag;
  // True when the token was written directly against its predecessor
  // ("good." splits into "good" and a joined ".").
  bool joined = false;

  bool tagged() const noexcept { return !tag.empty(); }
};

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
};

Token make_token(std::string surface, std::size_t index, bool joined = false);

// Expands every contraction in `text`. Table entries are matched as whole
// words (case-insensitively, keeping a leading capital); any remaining
// "n't" becomes a separate "not". The result never contains "n't".
std::string decontract(std::string_view text,
                       const ContractionTable& table = ContractionTable::builtin());

// Whitespace split, then trailing sentence punctuation (. , ! ? ;) is
// detached into tokens of its own. Casing is preserved on `surface`.
Sentence tokenize(std::string_view text);

// Joins surfaces with single spaces, attaching joined tokens to their
// predecessor.
std::string render(const std::vector<Token>& tokens);

// Rebuilds a sentence from a token list: reindexes from 0 and re-renders raw.
Sentence rebuild(std::vector<Token> tokens);

bool is_punctuation_token(std::string_view surface);

}  // namespace negare
