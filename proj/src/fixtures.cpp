#include "negare/fixtures.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "negare/corpus.hpp"
#include "negare/error.hpp"
#include "negare/pipeline.hpp"

namespace negare {
namespace {

namespace fs = std::filesystem;

std::vector<fs::path> files_with(const fs::path& dir, std::initializer_list<std::string_view> exts) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (std::find(exts.begin(), exts.end(), ext) != exts.end()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

Violation from_exception(const std::exception& e, const std::string& fallback_file) {
  if (const auto* fe = dynamic_cast<const FileError*>(&e)) return {fe->file(), fe->line(), e.what()};
  return {fallback_file, 0, e.what()};
}

void check_gold_pair(const Pipeline& pipeline, const GoldPair& pair, const std::string& file,
                     std::vector<Violation>& out) {
  const auto& lexicons = pipeline.lexicons();
  const auto& tag_lexicon = pipeline.tagger().lexicon();
  Sentence input = pipeline.prepare(pair.input);

  for (const CueMatch& cue : detect_negations(input, lexicons)) {
    if (cue.index + 1 >= input.size()) continue;
    const Token& next = input.tokens[cue.index + 1];
    if (is_punctuation_token(next.surface)) continue;
    if (!tag_lexicon.find(next.norm))
      out.push_back({file, pair.line,
                     "tag lexicon has no entry for '" + next.norm + "' (follows cue '" + cue.cue +
                         "')"});
  }

  std::set<std::string> input_words;
  for (const auto& t : input.tokens) input_words.insert(t.norm);
  Sentence expected = tokenize(pair.expected_transformed);
  for (const auto& t : expected.tokens) {
    if (input_words.count(t.norm)) continue;
    bool found = std::any_of(input.tokens.begin(), input.tokens.end(), [&](const Token& source) {
      auto antonyms = lexicons.get_antonyms(source.norm);
      return std::find(antonyms.begin(), antonyms.end(), t.norm) != antonyms.end();
    });
    if (!found)
      out.push_back({file, pair.line,
                     "expected word '" + t.norm + "' is not an antonym of any input word"});
  }

  TransformResult result = resolve_negation(input, lexicons);
  if (result.transformed.raw != pair.expected_transformed)
    out.push_back({file, pair.line,
                   "pipeline produced \"" + result.transformed.raw + "\", expected \"" +
                       pair.expected_transformed + "\""});
  if (result.cues_kept.size() != pair.expected_cues_kept)
    out.push_back({file, pair.line,
                   "pipeline kept " + std::to_string(result.cues_kept.size()) +
                       " cue(s), expected " + std::to_string(pair.expected_cues_kept)});
}

}  // namespace

std::vector<Violation> validate_fixtures(const fs::path& root) {
  std::vector<Violation> violations;

  std::optional<Pipeline> pipeline;
  try {
    pipeline.emplace(Pipeline::open(root / "lexicons"));
  } catch (const std::exception& e) {
    violations.push_back(from_exception(e, (root / "lexicons").string()));
  }

  for (const auto& path : files_with(root / "corpus", {".jsonl", ".txt"})) {
    try {
      if (read_corpus(path).empty()) violations.push_back({path.string(), 0, "corpus is empty"});
    } catch (const std::exception& e) {
      violations.push_back(from_exception(e, path.string()));
    }
  }
  for (const auto& path : files_with(root / "corpus", {".conll"})) {
    try {
      read_pretagged(path);
    } catch (const std::exception& e) {
      violations.push_back(from_exception(e, path.string()));
    }
  }

  for (const auto& path : files_with(root / "gold", {".jsonl"})) {
    std::vector<GoldPair> pairs;
    try {
      pairs = read_gold_pairs(path);
    } catch (const std::exception& e) {
      violations.push_back(from_exception(e, path.string()));
      continue;
    }
    if (!pipeline) continue;
    for (const auto& pair : pairs) check_gold_pair(*pipeline, pair, path.string(), violations);
  }
  return violations;
}

std::string format_violation(const Violation& v) {
  std::string out = v.file;
  if (v.line > 0) out += ":" + std::to_string(v.line);
  // FileError messages already carry the location.
  if (v.message.rfind(out, 0) == 0) return v.message;
  return out + ": " + v.message;
}

}  // namespace negare
