#include "negare/negare.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "negare/corpus.hpp"
#include "negare/error.hpp"
#include "negare/eval.hpp"
#include "negare/fixtures.hpp"
#include "negare/pipeline.hpp"

struct negare_pipeline {
  negare::Pipeline impl;
};

struct negare_corpus {
  std::vector<negare::CorpusRecord> records;
};

namespace {

thread_local std::string last_error;

negare_status fail(negare_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
negare_status guarded(Fn&& fn) {
  try {
    fn();
    return NEGARE_OK;
  } catch (const negare::Error& e) {
    return fail(static_cast<negare_status>(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NEGARE_E_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NEGARE_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NEGARE_E_INTERNAL, e.what());
  } catch (...) {
    return fail(NEGARE_E_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

negare::ScoreMode to_mode(negare_mode mode) {
  switch (mode) {
    case NEGARE_MODE_PLAIN:
      return negare::ScoreMode::kPlain;
    case NEGARE_MODE_INVERT_NEXT:
      return negare::ScoreMode::kInvertNext;
    case NEGARE_MODE_ANTONYMIZE:
      return negare::ScoreMode::kAntonymize;
  }
  throw std::invalid_argument("unknown scoring mode " + std::to_string(static_cast<int>(mode)));
}

}  // namespace

extern "C" {

const char* negare_version(void) { return "1.0.0"; }

const char* negare_status_name(negare_status status) {
  switch (status) {
    case NEGARE_OK:
      return "ok";
    case NEGARE_E_USAGE:
      return "usage";
    case NEGARE_E_IO:
      return "io";
    case NEGARE_E_LEXICON:
      return "lexicon";
    case NEGARE_E_PARSE:
      return "parse";
    case NEGARE_E_ALIGNMENT:
      return "alignment";
    case NEGARE_E_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* negare_last_error(void) { return last_error.c_str(); }

void negare_string_free(char* str) { std::free(str); }

negare_status negare_mode_parse(const char* name, negare_mode* out) {
  return guarded([&] {
    require(name && out, "name/out");
    auto mode = negare::parse_score_mode(name);
    if (!mode) throw std::invalid_argument(std::string("unknown scoring mode '") + name + "'");
    *out = static_cast<negare_mode>(*mode);
  });
}

const char* negare_mode_name(negare_mode mode) {
  try {
    return negare::to_string(to_mode(mode)).data();
  } catch (...) {
    return "unknown";
  }
}

negare_status negare_pipeline_open(const char* lexicon_dir, unsigned flags,
                                   negare_pipeline** out) {
  return guarded([&] {
    require(lexicon_dir && out, "lexicon_dir/out");
    *out = nullptr;
    negare::LexiconOptions options;
    options.strict_first_synonym = (flags & NEGARE_STRICT_FIRST_SYNONYM) != 0;
    *out = new negare_pipeline{negare::Pipeline::open(lexicon_dir, options)};
  });
}

void negare_pipeline_close(negare_pipeline* pipeline) { delete pipeline; }

negare_status negare_pipeline_summary_json(const negare_pipeline* pipeline, char** out_json) {
  return guarded([&] {
    require(pipeline && out_json, "pipeline/out_json");
    const auto& lex = pipeline->impl.lexicons();
    nlohmann::ordered_json sources = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < lex.sources().size(); ++i)
      sources.push_back({{"id", lex.sources()[i]}, {"rows", lex.source_row_counts()[i]}});
    nlohmann::ordered_json summary;
    summary["sources"] = std::move(sources);
    summary["antonym_headwords"] = lex.antonym_headword_count();
    summary["synonym_headwords"] = lex.synonym_headword_count();
    summary["sentiment_entries"] = lex.sentiment_entry_count();
    summary["cues"] = lex.cues();
    summary["contractions"] = lex.contractions().size();
    summary["tag_entries"] = pipeline->impl.tagger().lexicon().entries().size();
    *out_json = copy_out(summary.dump());
  });
}

negare_status negare_decontract(const negare_pipeline* pipeline, const char* text, char** out) {
  return guarded([&] {
    require(text && out, "text/out");
    const auto& table = pipeline ? pipeline->impl.lexicons().contractions()
                                 : negare::ContractionTable::builtin();
    *out = copy_out(negare::decontract(text, table));
  });
}

negare_status negare_detect_json(const negare_pipeline* pipeline, const char* id, const char* text,
                                 char** out_json) {
  return guarded([&] {
    require(pipeline && text && out_json, "pipeline/text/out_json");
    auto sentence = pipeline->impl.prepare(text);
    auto cues = negare::detect_negations(sentence, pipeline->impl.lexicons());
    *out_json = copy_out(negare::detect_record_json(id ? id : "", cues));
  });
}

negare_status negare_transform_json(const negare_pipeline* pipeline, const char* id,
                                    const char* text, char** out_json) {
  return guarded([&] {
    require(pipeline && text && out_json, "pipeline/text/out_json");
    auto result = pipeline->impl.transform(text);
    *out_json = copy_out(negare::transform_record_json(id ? id : "", text, result));
  });
}

negare_status negare_transform_text(const negare_pipeline* pipeline, const char* text,
                                    char** out) {
  return guarded([&] {
    require(pipeline && text && out, "pipeline/text/out");
    *out = copy_out(pipeline->impl.transform(text).transformed.raw);
  });
}

negare_status negare_score(const negare_pipeline* pipeline, const char* text, negare_mode mode,
                           double* out_value, size_t* out_matched) {
  return guarded([&] {
    require(pipeline && text && out_value, "pipeline/text/out_value");
    auto score = pipeline->impl.score(text, to_mode(mode));
    *out_value = score.value;
    if (out_matched) *out_matched = score.matched;
  });
}

negare_status negare_antonyms_json(const negare_pipeline* pipeline, const char* word,
                                   char** out_json) {
  return guarded([&] {
    require(pipeline && word && out_json, "pipeline/word/out_json");
    std::string lower(word);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    nlohmann::json list = pipeline->impl.lexicons().get_antonyms(lower);
    *out_json = copy_out(list.dump());
  });
}

negare_status negare_corpus_load(const char* path, negare_corpus** out) {
  return guarded([&] {
    require(path && out, "path/out");
    *out = nullptr;
    *out = new negare_corpus{negare::read_corpus(path)};
  });
}

void negare_corpus_free(negare_corpus* corpus) { delete corpus; }

size_t negare_corpus_size(const negare_corpus* corpus) {
  return corpus ? corpus->records.size() : 0;
}

const char* negare_corpus_id(const negare_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->records.size()) return nullptr;
  return corpus->records[index].id.c_str();
}

const char* negare_corpus_text(const negare_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->records.size()) return nullptr;
  return corpus->records[index].text.c_str();
}

negare_status negare_sample_indices(size_t n, double fraction, uint64_t seed, size_t* out,
                                    size_t* out_count) {
  return guarded([&] {
    require(out_count && (out || n == 0), "out/out_count");
    auto picked = negare::sample_indices(n, fraction, seed);
    std::copy(picked.begin(), picked.end(), out);
    *out_count = picked.size();
  });
}

negare_status negare_eval(const negare_pipeline* pipeline, const negare_corpus* corpus,
                          const negare_eval_options* options, char** out_matrix_csv,
                          char** out_pairs_csv) {
  return guarded([&] {
    require(pipeline && corpus && options, "pipeline/corpus/options");
    require(options->modes || options->mode_count == 0, "options->modes");
    require(options->external_files || options->external_count == 0, "options->external_files");

    negare::EvalOptions eval;
    eval.modes.clear();
    for (size_t i = 0; i < options->mode_count; ++i) eval.modes.push_back(to_mode(options->modes[i]));
    for (size_t i = 0; i < options->external_count; ++i) {
      require(options->external_files[i], "external file path");
      eval.external_files.emplace_back(options->external_files[i]);
    }
    if (options->sample_fraction > 0.0) eval.sample_fraction = options->sample_fraction;
    eval.seed = options->seed;
    eval.jobs = options->jobs == 0 ? 1 : options->jobs;

    auto report = negare::evaluate(pipeline->impl, corpus->records, eval);
    std::string matrix = report.matrix.to_csv();
    std::string pairs = report.pairs_csv();
    char* matrix_out = out_matrix_csv ? copy_out(matrix) : nullptr;
    try {
      if (out_pairs_csv) *out_pairs_csv = copy_out(pairs);
    } catch (...) {
      std::free(matrix_out);
      throw;
    }
    if (out_matrix_csv) *out_matrix_csv = matrix_out;
  });
}

negare_status negare_validate_fixtures(const char* fixtures_dir, char** out_report,
                                       size_t* out_violations) {
  return guarded([&] {
    require(fixtures_dir && out_report, "fixtures_dir/out_report");
    auto violations = negare::validate_fixtures(fixtures_dir);
    std::string report;
    for (const auto& v : violations) report += negare::format_violation(v) + "\n";
    *out_report = copy_out(report);
    if (out_violations) *out_violations = violations.size();
  });
}

}  // extern "C"
