#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negare/negation.hpp"

namespace negare {

struct CorpusRecord {
  std::string id;
  std::string text;
  std::optional<double> gold_label;
};

// JSONL corpus: one `{"id": ..., "text": ..., "gold_label": ...}` object per
// line. Records written by the transform command are accepted too; their
// "transformed" field stands in for "text". Missing ids become the record's
// 1-based ordinal. Throws FileError(kParse) naming the line.
std::vector<CorpusRecord> parse_jsonl_corpus(std::string_view text,
                                             const std::string& origin = "<input>");

// One sentence per non-blank line; ids are line numbers.
std::vector<CorpusRecord> parse_plain_corpus(std::string_view text);

// JSONL when the extension is .jsonl/.json or the first non-blank character
// is '{', plain text otherwise. Throws FileError(kIo) when unreadable.
std::vector<CorpusRecord> read_corpus(const std::filesystem::path& path);

struct GoldPair {
  std::string input;
  std::string expected_transformed;
  std::size_t expected_cues_kept = 0;
  std::size_t line = 0;  // 1-based line in the gold file
};

std::vector<GoldPair> read_gold_pairs(const std::filesystem::path& path);

// {"id", "original", "transformed", "edits": [...], "cues_kept": [...]} on a
// single line.
std::string transform_record_json(std::string_view id, std::string_view original_text,
                                  const TransformResult& result);

// {"id", "cues": [{"index", "cue"}, ...]} on a single line.
std::string detect_record_json(std::string_view id, const std::vector<CueMatch>& cues);

}  // namespace negare
