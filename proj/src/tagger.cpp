#include "negare/tagger.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "negare/error.hpp"
#include "text_util.hpp"

namespace negare {
namespace {

constexpr std::array<std::string_view, 45> kPennTags = {
    "CC",  "CD",  "DT",  "EX",  "FW",  "IN",   "JJ",    "JJR",   "JJS", "LS",  "MD",  "NN",
    "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",  "PRP$",  "RB",    "RBR", "RBS", "RP",  "SYM",
    "TO",  "UH",  "VB",  "VBD", "VBG", "VBN",  "VBP",   "VBZ",   "WDT", "WP",  "WP$", "WRB",
    ".",   ",",   ":",   "``",  "''",  "-LRB-", "-RRB-", "#",     "$"};

// A word must be at least this much longer than a suffix for the rule to
// apply, so "bed" and "sing" fall through to the default.
constexpr std::size_t kMinStemLength = 2;

bool is_number(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '.' && c != ',' && c != '-') {
      return false;
    }
  }
  return digit;
}

std::vector<TagLexicon::SuffixRule> sort_rules(std::vector<TagLexicon::SuffixRule> rules) {
  std::stable_sort(rules.begin(), rules.end(), [](const auto& a, const auto& b) {
    return a.first.size() > b.first.size();
  });
  return rules;
}

}  // namespace

bool is_valid_ptb_tag(std::string_view tag) {
  return std::find(kPennTags.begin(), kPennTags.end(), tag) != kPennTags.end();
}

const std::vector<TagLexicon::SuffixRule>& TagLexicon::default_suffix_rules() {
  static const std::vector<SuffixRule> rules = sort_rules({
      {"ing", "VBG"},
      {"ed", "VBN"},
      {"ly", "RB"},
      {"ous", "JJ"},
      {"ful", "JJ"},
      {"able", "JJ"},
      {"less", "JJ"},
      {"ive", "JJ"},
      {"y", "JJ"},
  });
  return rules;
}

TagLexicon::TagLexicon() : TagLexicon({}, default_suffix_rules()) {}

TagLexicon::TagLexicon(std::unordered_map<std::string, std::string> entries,
                       std::vector<SuffixRule> suffix_rules, std::string default_tag)
    : entries_(std::move(entries)),
      suffix_rules_(sort_rules(std::move(suffix_rules))),
      default_tag_(std::move(default_tag)) {
  auto check = [](const std::string& tag) {
    if (!is_valid_ptb_tag(tag)) throw std::invalid_argument("unknown Penn Treebank tag '" + tag + "'");
  };
  for (const auto& [_, tag] : entries_) check(tag);
  for (const auto& [_, tag] : suffix_rules_) check(tag);
  check(default_tag_);
}

TagLexicon TagLexicon::load(const std::filesystem::path& path) {
  using Kind = LexiconError::Kind;
  const std::string file = path.string();
  std::unordered_map<std::string, std::string> entries;
  for (const auto& line : detail::read_resource_lines(file)) {
    auto cols = detail::split(line.text, '\t');
    if (cols.size() != 2)
      throw LexiconError(Kind::kParse, file, line.number,
                         "expected 2 tab-separated columns (word, tag), got " +
                             std::to_string(cols.size()));
    std::string word = detail::to_lower(detail::trim(cols[0]));
    std::string tag(detail::trim(cols[1]));
    if (word.empty() || detail::has_whitespace(word))
      throw LexiconError(Kind::kParse, file, line.number, "bad word '" + word + "'");
    if (!is_valid_ptb_tag(tag))
      throw LexiconError(Kind::kInvalidValue, file, line.number,
                         "unknown Penn Treebank tag '" + tag + "'");
    if (!entries.emplace(word, tag).second)
      throw LexiconError(Kind::kDuplicate, file, line.number, "duplicate tag entry '" + word + "'");
  }
  return TagLexicon(std::move(entries), default_suffix_rules());
}

const std::string* TagLexicon::find(std::string_view lowercase_word) const {
  auto it = entries_.find(std::string(lowercase_word));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::string* TagLexicon::match_suffix(std::string_view lowercase_word) const {
  for (const auto& [suffix, tag] : suffix_rules_) {
    if (lowercase_word.size() >= suffix.size() + kMinStemLength &&
        lowercase_word.substr(lowercase_word.size() - suffix.size()) == suffix)
      return &tag;
  }
  return nullptr;
}

std::string LexiconTagger::tag_word(const Token& token) const {
  if (is_punctuation_token(token.surface)) {
    char c = token.surface.front();
    if (c == ',') return ",";
    if (c == ';') return ":";
    return ".";
  }
  if (const std::string* tag = lexicon_.find(token.norm)) return *tag;
  if (is_number(token.surface)) return "CD";
  if (token.index > 0 && detail::is_upper(token.surface.front())) return "NNP";
  if (const std::string* tag = lexicon_.match_suffix(token.norm)) return *tag;
  return lexicon_.default_tag();
}

void LexiconTagger::tag(Sentence& sentence) const {
  for (auto& token : sentence.tokens)
    if (!token.tagged()) token.tag = tag_word(token);
}

std::vector<Sentence> parse_pretagged(std::string_view text, const std::string& origin) {
  std::vector<Sentence> sentences;
  std::vector<Token> current;
  auto flush = [&] {
    if (!current.empty()) sentences.push_back(rebuild(std::move(current)));
    current.clear();
  };

  std::size_t number = 0;
  for (std::string_view line : detail::split(text, '\n')) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::trim(line).empty()) {
      flush();
      continue;
    }
    auto cols = detail::split(line, '\t');
    if (cols.size() != 2 || detail::trim(cols[0]).empty())
      throw FileError(ErrorCode::kParse, origin, number, "expected `surface<TAB>tag`");
    std::string tag(detail::trim(cols[1]));
    if (!is_valid_ptb_tag(tag))
      throw FileError(ErrorCode::kParse, origin, number, "unknown Penn Treebank tag '" + tag + "'");

    std::string surface(detail::trim(cols[0]));
    bool joined = !current.empty() && is_punctuation_token(surface);
    Token token = make_token(std::move(surface), current.size(), joined);
    token.tag = std::move(tag);
    current.push_back(std::move(token));
  }
  flush();
  return sentences;
}

std::vector<Sentence> read_pretagged(const std::filesystem::path& path) {
  return parse_pretagged(detail::read_file(path.string()), path.string());
}

}  // namespace negare
