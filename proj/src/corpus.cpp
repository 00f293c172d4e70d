#include "negare/corpus.hpp"

#include <unordered_set>

#include <json.hpp>

#include "negare/error.hpp"
#include "text_util.hpp"

namespace negare {
namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string id_string(const json& value, const std::string& origin, std::size_t line) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw FileError(ErrorCode::kParse, origin, line, "\"id\" must be a string or an integer");
}

}  // namespace

std::vector<CorpusRecord> parse_jsonl_corpus(std::string_view text, const std::string& origin) {
  std::vector<CorpusRecord> records;
  std::unordered_set<std::string> ids;
  std::size_t number = 0;
  for (std::string_view line : detail::split(text, '\n')) {
    ++number;
    if (detail::trim(line).empty()) continue;

    json object = json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object())
      throw FileError(ErrorCode::kParse, origin, number, "not a JSON object");

    CorpusRecord record;
    record.id = object.contains("id") ? id_string(object["id"], origin, number)
                                      : std::to_string(records.size() + 1);

    const json* text_field = nullptr;
    if (object.contains("text")) {
      text_field = &object["text"];
    } else if (object.contains("transformed")) {
      text_field = &object["transformed"];
    }
    if (!text_field || !text_field->is_string())
      throw FileError(ErrorCode::kParse, origin, number, "missing string field \"text\"");
    record.text = text_field->get<std::string>();
    if (detail::trim(record.text).empty())
      throw FileError(ErrorCode::kParse, origin, number, "empty \"text\"");

    if (object.contains("gold_label") && !object["gold_label"].is_null()) {
      if (!object["gold_label"].is_number())
        throw FileError(ErrorCode::kParse, origin, number, "\"gold_label\" must be a number");
      record.gold_label = object["gold_label"].get<double>();
    }

    if (!ids.insert(record.id).second)
      throw FileError(ErrorCode::kParse, origin, number, "duplicate id '" + record.id + "'");
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<CorpusRecord> parse_plain_corpus(std::string_view text) {
  std::vector<CorpusRecord> records;
  std::size_t number = 0;
  for (std::string_view line : detail::split(text, '\n')) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::trim(line).empty()) continue;
    records.push_back({std::to_string(number), std::string(line), std::nullopt});
  }
  return records;
}

std::vector<CorpusRecord> read_corpus(const std::filesystem::path& path) {
  std::string content = detail::read_file(path.string(), ErrorCode::kIo);
  const auto ext = path.extension();
  bool jsonl = ext == ".jsonl" || ext == ".json";
  if (!jsonl) {
    std::string_view trimmed = detail::trim(content);
    jsonl = !trimmed.empty() && trimmed.front() == '{';
  }
  return jsonl ? parse_jsonl_corpus(content, path.string()) : parse_plain_corpus(content);
}

std::vector<GoldPair> read_gold_pairs(const std::filesystem::path& path) {
  const std::string origin = path.string();
  std::string content = detail::read_file(origin, ErrorCode::kIo);
  std::vector<GoldPair> pairs;
  std::size_t number = 0;
  for (std::string_view line : detail::split(content, '\n')) {
    ++number;
    if (detail::trim(line).empty()) continue;
    json object = json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object() || !object.contains("input") ||
        !object["input"].is_string() || !object.contains("expected_transformed") ||
        !object["expected_transformed"].is_string())
      throw FileError(ErrorCode::kParse, origin, number,
                      "expected {\"input\", \"expected_transformed\", \"expected_cues_kept\"}");
    GoldPair pair;
    pair.line = number;
    pair.input = object["input"].get<std::string>();
    pair.expected_transformed = object["expected_transformed"].get<std::string>();
    if (object.contains("expected_cues_kept")) {
      if (!object["expected_cues_kept"].is_number_unsigned())
        throw FileError(ErrorCode::kParse, origin, number,
                        "\"expected_cues_kept\" must be a non-negative integer");
      pair.expected_cues_kept = object["expected_cues_kept"].get<std::size_t>();
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::string transform_record_json(std::string_view id, std::string_view original_text,
                                  const TransformResult& result) {
  ojson edits = ojson::array();
  for (const auto& edit : result.edits) {
    edits.push_back({{"kind", std::string(to_string(edit.kind))},
                     {"position", edit.position},
                     {"before", edit.before},
                     {"after", edit.after}});
  }
  ojson kept = ojson::array();
  for (const auto& cue : result.cues_kept) kept.push_back({{"index", cue.index}, {"cue", cue.cue}});

  ojson record = ojson::object();
  record["id"] = std::string(id);
  record["original"] = std::string(original_text);
  record["transformed"] = result.transformed.raw;
  record["edits"] = std::move(edits);
  record["cues_kept"] = std::move(kept);
  return record.dump(-1, ' ', false, ojson::error_handler_t::replace);
}

std::string detect_record_json(std::string_view id, const std::vector<CueMatch>& cues) {
  ojson list = ojson::array();
  for (const auto& cue : cues) list.push_back({{"index", cue.index}, {"cue", cue.cue}});
  ojson record = ojson::object();
  record["id"] = std::string(id);
  record["cues"] = std::move(list);
  return record.dump(-1, ' ', false, ojson::error_handler_t::replace);
}

}  // namespace negare
