#include "negare/lexicons.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "negare/error.hpp"
#include "text_util.hpp"

namespace negare {
namespace {

namespace fs = std::filesystem;
using Kind = LexiconError::Kind;

std::string validated_word(std::string_view raw, const std::string& file, std::size_t line,
                           std::string_view what) {
  std::string word = detail::to_lower(detail::trim(raw));
  if (word.empty())
    throw LexiconError(Kind::kParse, file, line, "empty " + std::string(what));
  if (detail::has_whitespace(word))
    throw LexiconError(Kind::kParse, file, line,
                       std::string(what) + " '" + word + "' contains whitespace");
  return word;
}

// Comma-separated word list: lowercased, deduplicated in order, without the
// headword itself.
std::vector<std::string> parse_word_list(std::string_view column, const std::string& headword,
                                         const std::string& file, std::size_t line) {
  std::vector<std::string> words;
  for (std::string_view item : detail::split(column, ',')) {
    if (detail::trim(item).empty()) continue;
    std::string word = validated_word(item, file, line, "list entry");
    if (word == headword) continue;
    if (std::find(words.begin(), words.end(), word) == words.end()) words.push_back(word);
  }
  return words;
}

void append_unique(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& word : from)
    if (std::find(into.begin(), into.end(), word) == into.end()) into.push_back(word);
}

std::vector<std::string> sorted_keys(const auto& map) {
  std::vector<std::string> keys;
  keys.reserve(map.size());
  for (const auto& [key, _] : map) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

LexiconPaths LexiconPaths::from_directory(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw LexiconError(Kind::kMissing, dir.string(), 0, "lexicon directory not found");

  LexiconPaths paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind("antonyms", 0) == 0 &&
        entry.path().extension() == ".tsv")
      paths.antonyms.push_back(entry.path());
  }
  std::sort(paths.antonyms.begin(), paths.antonyms.end());
  if (paths.antonyms.empty())
    throw LexiconError(Kind::kMissing, dir.string(), 0, "no antonyms*.tsv file");

  paths.sentiment = dir / "sentiment.tsv";
  if (!fs::is_regular_file(paths.sentiment, ec))
    throw LexiconError(Kind::kMissing, paths.sentiment.string(), 0, "file not found");

  auto optional_file = [&](const char* name) -> std::optional<fs::path> {
    fs::path p = dir / name;
    if (fs::is_regular_file(p, ec)) return p;
    return std::nullopt;
  };
  paths.synonyms = optional_file("synonyms.tsv");
  paths.cues = optional_file("cues.txt");
  paths.contractions = optional_file("contractions.tsv");
  return paths;
}

const std::vector<std::string>& LexiconStore::default_cues() {
  static const std::vector<std::string> cues = {"not", "nor", "never", "neither"};
  return cues;
}

LexiconStore LexiconStore::load_directory(const fs::path& dir, LexiconOptions options) {
  return load(LexiconPaths::from_directory(dir), options);
}

LexiconStore LexiconStore::load(const LexiconPaths& paths, LexiconOptions options) {
  LexiconStore store;
  store.options_ = options;

  if (paths.antonyms.empty())
    throw LexiconError(Kind::kMissing, "", 0, "no antonym files given");

  for (const auto& path : paths.antonyms) {
    const std::string file = path.string();
    auto lines = detail::read_resource_lines(file);
    if (lines.empty()) throw LexiconError(Kind::kEmptySource, file, 0, "antonym file has no entries");

    for (const auto& line : lines) {
      auto cols = detail::split(line.text, '\t');
      if (cols.size() != 3)
        throw LexiconError(Kind::kParse, file, line.number,
                           "expected 3 tab-separated columns (headword, source, antonyms), got " +
                               std::to_string(cols.size()));
      std::string headword = validated_word(cols[0], file, line.number, "headword");
      std::string source = validated_word(cols[1], file, line.number, "source id");
      std::vector<std::string> words = parse_word_list(cols[2], headword, file, line.number);
      if (words.empty())
        throw LexiconError(Kind::kParse, file, line.number,
                           "no antonyms listed for '" + headword + "'");

      auto src_it = std::find(store.sources_.begin(), store.sources_.end(), source);
      std::size_t src = static_cast<std::size_t>(src_it - store.sources_.begin());
      if (src_it == store.sources_.end()) {
        store.sources_.push_back(source);
        store.source_rows_.push_back(0);
      }
      ++store.source_rows_[src];

      auto& lists = store.antonyms_[headword];
      auto pos = std::lower_bound(lists.begin(), lists.end(), src,
                                  [](const SourceList& l, std::size_t s) { return l.source < s; });
      if (pos != lists.end() && pos->source == src) {
        append_unique(pos->words, words);
      } else {
        lists.insert(pos, SourceList{src, std::move(words)});
      }
    }
  }

  if (paths.synonyms) {
    const std::string file = paths.synonyms->string();
    for (const auto& line : detail::read_resource_lines(file)) {
      auto cols = detail::split(line.text, '\t');
      if (cols.size() != 2)
        throw LexiconError(Kind::kParse, file, line.number,
                           "expected 2 tab-separated columns (headword, synonyms), got " +
                               std::to_string(cols.size()));
      std::string headword = validated_word(cols[0], file, line.number, "headword");
      append_unique(store.synonyms_[headword],
                    parse_word_list(cols[1], headword, file, line.number));
    }
  }

  {
    const std::string file = paths.sentiment.string();
    for (const auto& line : detail::read_resource_lines(file)) {
      auto cols = detail::split(line.text, '\t');
      if (cols.size() != 2)
        throw LexiconError(Kind::kParse, file, line.number,
                           "expected 2 tab-separated columns (word, polarity), got " +
                               std::to_string(cols.size()));
      std::string word = validated_word(cols[0], file, line.number, "word");
      std::string_view number = detail::trim(cols[1]);
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
      if (ec != std::errc() || ptr != number.data() + number.size())
        throw LexiconError(Kind::kParse, file, line.number,
                           "polarity '" + std::string(number) + "' is not a number");
      if (!std::isfinite(value) || value < -1.0 || value > 1.0)
        throw LexiconError(Kind::kInvalidValue, file, line.number,
                           "polarity " + std::string(number) + " outside [-1, 1]");
      if (!store.polarity_.emplace(word, value).second)
        throw LexiconError(Kind::kDuplicate, file, line.number,
                           "duplicate sentiment entry '" + word + "'");
    }
  }

  if (paths.cues) {
    const std::string file = paths.cues->string();
    for (const auto& line : detail::read_resource_lines(file)) {
      std::string cue = validated_word(line.text, file, line.number, "cue");
      if (store.cue_set_.insert(cue).second) store.cue_list_.push_back(cue);
    }
    if (store.cue_list_.empty()) throw LexiconError(Kind::kEmptySource, file, 0, "cue file has no entries");
  } else {
    store.cue_list_ = default_cues();
    store.cue_set_.insert(store.cue_list_.begin(), store.cue_list_.end());
  }

  if (paths.contractions) {
    store.contractions_ = ContractionTable::load(paths.contractions->string());
  } else {
    store.contractions_ = ContractionTable::builtin();
  }
  return store;
}

std::vector<AntonymHit> LexiconStore::lookup_antonyms(std::string_view word) const {
  std::vector<AntonymHit> hits;
  auto it = antonyms_.find(std::string(word));
  if (it == antonyms_.end()) return hits;
  for (const auto& list : it->second) {
    for (const auto& antonym : list.words) {
      bool seen = std::any_of(hits.begin(), hits.end(),
                              [&](const AntonymHit& h) { return h.antonym == antonym; });
      if (!seen) hits.push_back({antonym, sources_[list.source]});
    }
  }
  return hits;
}

const std::vector<std::string>& LexiconStore::lookup_synonyms(std::string_view word) const {
  static const std::vector<std::string> kNone;
  auto it = synonyms_.find(std::string(word));
  return it == synonyms_.end() ? kNone : it->second;
}

std::vector<std::string> LexiconStore::get_antonyms(std::string_view word) const {
  auto strings = [&](const std::vector<AntonymHit>& hits) {
    std::vector<std::string> out;
    for (const auto& hit : hits)
      if (hit.antonym != word) out.push_back(hit.antonym);
    return out;
  };

  if (auto direct = strings(lookup_antonyms(word)); !direct.empty()) return direct;

  for (const auto& synonym : lookup_synonyms(word)) {
    if (auto pivot = strings(lookup_antonyms(synonym)); !pivot.empty()) return pivot;
    if (options_.strict_first_synonym) break;
  }
  return {};
}

double LexiconStore::polarity_of(std::string_view word) const {
  auto it = polarity_.find(std::string(word));
  return it == polarity_.end() ? 0.0 : it->second;
}

bool LexiconStore::has_polarity(std::string_view word) const {
  return polarity_.count(std::string(word)) > 0;
}

bool LexiconStore::is_cue(std::string_view word) const {
  return cue_set_.count(std::string(word)) > 0;
}

std::vector<std::string> LexiconStore::antonym_headwords() const { return sorted_keys(antonyms_); }
std::vector<std::string> LexiconStore::synonym_headwords() const { return sorted_keys(synonyms_); }
std::vector<std::string> LexiconStore::sentiment_words() const { return sorted_keys(polarity_); }

}  // namespace negare
