// negare: command-line front end over the C API.
//
//   negare decontract INPUT [-o OUT]
//   negare detect     INPUT [-o OUT] [--lexicons DIR]
//   negare transform  INPUT [-o OUT] [--lexicons DIR] [--strict-first-synonym]
//   negare score      INPUT [-o OUT] [--modes plain,antonymize] [--sample F --seed N]
//   negare eval       INPUT [--matrix OUT] [--pairs OUT] [--modes ...] [--external FILE ...]
//   negare validate   [FIXTURES_DIR]
//
// Exit codes: 0 ok, 1 usage, 2 input I/O, 3 lexicon, 4 parse, 5 alignment.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "negare/negare.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitLexicon = 3;

struct StatusError {
  int code;
  std::string message;
};

void check(negare_status status) {
  if (status != NEGARE_OK) throw StatusError{static_cast<int>(status), negare_last_error()};
}

struct FreeString {
  void operator()(char* s) const { negare_string_free(s); }
};
using OwnedString = std::unique_ptr<char, FreeString>;

struct ClosePipeline {
  void operator()(negare_pipeline* p) const { negare_pipeline_close(p); }
};
struct FreeCorpus {
  void operator()(negare_corpus* c) const { negare_corpus_free(c); }
};
using PipelinePtr = std::unique_ptr<negare_pipeline, ClosePipeline>;
using CorpusPtr = std::unique_ptr<negare_corpus, FreeCorpus>;

struct Common {
  std::string input;
  std::string output = "-";
  std::string lexicons;
  bool strict_first_synonym = false;
  unsigned jobs = 1;
};

PipelinePtr open_pipeline(const Common& common) {
  std::string dir = common.lexicons;
  if (dir.empty()) {
    if (const char* env = std::getenv("NEGARE_LEXICON_DIR")) dir = env;
  }
  if (dir.empty())
    throw StatusError{kExitLexicon, "no lexicon directory: pass --lexicons or set NEGARE_LEXICON_DIR"};
  negare_pipeline* raw = nullptr;
  check(negare_pipeline_open(dir.c_str(),
                             common.strict_first_synonym ? NEGARE_STRICT_FIRST_SYNONYM : 0u, &raw));
  return PipelinePtr(raw);
}

CorpusPtr load_corpus(const std::string& path) {
  negare_corpus* raw = nullptr;
  check(negare_corpus_load(path.c_str(), &raw));
  return CorpusPtr(raw);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw StatusError{kExitIo, path + ": cannot write"};
}

// Runs `fn(i)` for every record on `jobs` threads; results keep input order.
std::vector<std::string> map_records(std::size_t n, unsigned jobs,
                                     const std::function<std::string(std::size_t)>& fn) {
  std::vector<std::string> out(n);
  std::vector<std::optional<StatusError>> errors(std::max(1u, jobs));
  auto worker = [&](std::size_t w, std::size_t begin, std::size_t end) {
    try {
      for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
    } catch (const StatusError& e) {
      errors[w] = e;
    }
  };
  if (jobs <= 1 || n < 2) {
    worker(0, 0, n);
  } else {
    std::size_t workers = std::min<std::size_t>(jobs, n);
    std::size_t block = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back(worker, w, w * block, std::min(n, (w + 1) * block));
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) throw *e;
  return out;
}

std::vector<negare_mode> parse_modes(const std::vector<std::string>& names) {
  std::vector<negare_mode> modes;
  for (const auto& name : names) {
    negare_mode mode;
    if (negare_mode_parse(name.c_str(), &mode) != NEGARE_OK)
      throw StatusError{kExitUsage, "unknown mode '" + name + "' (plain, invert_next, antonymize)"};
    modes.push_back(mode);
  }
  if (modes.empty()) throw StatusError{kExitUsage, "--modes is empty"};
  return modes;
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  return s == "-0.000000" ? "0.000000" : s;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run_decontract(const Common& common) {
  std::ifstream in(common.input, std::ios::binary);
  if (!in) throw StatusError{kExitIo, common.input + ": cannot open file"};
  PipelinePtr pipeline;
  if (!common.lexicons.empty()) pipeline = open_pipeline(common);

  std::string out;
  std::string line;
  while (std::getline(in, line)) {
    bool cr = !line.empty() && line.back() == '\r';
    if (cr) line.pop_back();
    char* expanded = nullptr;
    check(negare_decontract(pipeline.get(), line.c_str(), &expanded));
    out += OwnedString(expanded).get();
    out += cr ? "\r\n" : "\n";
  }
  write_output(common.output, out);
  return 0;
}

int run_records(const Common& common, bool detect) {
  auto pipeline = open_pipeline(common);
  auto corpus = load_corpus(common.input);
  const std::size_t n = negare_corpus_size(corpus.get());
  auto lines = map_records(n, common.jobs, [&](std::size_t i) {
    char* json = nullptr;
    const char* id = negare_corpus_id(corpus.get(), i);
    const char* text = negare_corpus_text(corpus.get(), i);
    check(detect ? negare_detect_json(pipeline.get(), id, text, &json)
                 : negare_transform_json(pipeline.get(), id, text, &json));
    return std::string(OwnedString(json).get()) + "\n";
  });
  std::string out;
  for (const auto& l : lines) out += l;
  write_output(common.output, out);
  return 0;
}

struct Sampling {
  std::optional<double> fraction;
  std::optional<std::uint64_t> seed;

  void validate() const {
    if (fraction.has_value() != seed.has_value())
      throw StatusError{kExitUsage, "--sample and --seed must be given together"};
  }
};

int run_score(const Common& common, const std::vector<std::string>& mode_names,
              const Sampling& sampling) {
  sampling.validate();
  auto modes = parse_modes(mode_names);
  auto pipeline = open_pipeline(common);
  auto corpus = load_corpus(common.input);
  const std::size_t n = negare_corpus_size(corpus.get());

  std::vector<std::size_t> picked(n);
  std::size_t count = n;
  if (sampling.fraction) {
    check(negare_sample_indices(n, *sampling.fraction, *sampling.seed, picked.data(), &count));
    picked.resize(count);
  } else {
    for (std::size_t i = 0; i < n; ++i) picked[i] = i;
  }

  auto rows = map_records(picked.size(), common.jobs, [&](std::size_t k) {
    std::size_t i = picked[k];
    const char* text = negare_corpus_text(corpus.get(), i);
    std::string row = std::to_string(i) + "," + csv_field(negare_corpus_id(corpus.get(), i));
    for (negare_mode mode : modes) {
      double value = 0.0;
      check(negare_score(pipeline.get(), text, mode, &value, nullptr));
      row += "," + fixed6(value);
    }
    return row + "\n";
  });

  std::string out = "index,sentence_id";
  for (negare_mode mode : modes) out += std::string(",") + negare_mode_name(mode);
  out += "\n";
  for (const auto& r : rows) out += r;
  write_output(common.output, out);
  return 0;
}

int run_eval(const Common& common, const std::vector<std::string>& mode_names,
             const std::vector<std::string>& externals, const Sampling& sampling,
             const std::string& matrix_path, const std::string& pairs_path) {
  sampling.validate();
  if (!matrix_path.empty() && matrix_path == pairs_path)
    throw StatusError{kExitUsage, "--matrix and --pairs must name different files"};
  auto modes = parse_modes(mode_names);
  auto pipeline = open_pipeline(common);
  auto corpus = load_corpus(common.input);

  std::vector<const char*> external_ptrs;
  for (const auto& e : externals) external_ptrs.push_back(e.c_str());

  negare_eval_options options{};
  options.modes = modes.data();
  options.mode_count = modes.size();
  options.external_files = external_ptrs.empty() ? nullptr : external_ptrs.data();
  options.external_count = external_ptrs.size();
  options.sample_fraction = sampling.fraction.value_or(0.0);
  options.seed = sampling.seed.value_or(0);
  options.jobs = common.jobs;

  char* matrix = nullptr;
  char* pairs = nullptr;
  check(negare_eval(pipeline.get(), corpus.get(), &options, &matrix, &pairs));
  OwnedString matrix_owned(matrix), pairs_owned(pairs);

  if (matrix_path.empty() && pairs_path.empty()) {
    write_output("-", matrix);
    return 0;
  }
  if (!matrix_path.empty()) write_output(matrix_path, matrix);
  if (!pairs_path.empty()) write_output(pairs_path, pairs);
  return 0;
}

int run_validate(const std::string& dir) {
  char* report = nullptr;
  std::size_t violations = 0;
  check(negare_validate_fixtures(dir.c_str(), &report, &violations));
  OwnedString owned(report);
  if (violations == 0) {
    std::cout << dir << ": ok\n";
    return 0;
  }
  std::cerr << report;
  return kExitLexicon;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negation detection and antonym-based rewriting"};
  app.require_subcommand(1);
  app.set_version_flag("--version", negare_version());

  Common common;
  std::vector<std::string> modes = {"plain", "antonymize"};
  std::vector<std::string> externals;
  Sampling sampling;
  std::string matrix_path, pairs_path;
  std::string fixtures_dir = "fixtures";

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("input", common.input, "Input corpus (JSONL or one sentence per line)")
        ->required();
    cmd->add_option("-o,--output", common.output, "Output file, '-' for stdout");
  };
  auto add_pipeline = [&](CLI::App* cmd) {
    cmd->add_option("--lexicons", common.lexicons,
                    "Lexicon directory (default: $NEGARE_LEXICON_DIR)");
    cmd->add_flag("--strict-first-synonym", common.strict_first_synonym,
                  "Only try the first synonym when a word has no antonyms");
    cmd->add_option("-j,--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--sample", sampling.fraction, "Evaluate a random fraction in (0, 1]")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", sampling.seed, "Seed for --sample");
  };

  auto* decontract = app.add_subcommand("decontract", "Expand contractions line by line");
  add_io(decontract);
  decontract->add_option("--lexicons", common.lexicons,
                         "Take the contraction table from this lexicon directory");

  auto* detect = app.add_subcommand("detect", "List negation cues per sentence (JSONL)");
  add_io(detect);
  add_pipeline(detect);

  auto* transform = app.add_subcommand("transform", "Resolve negations by antonym substitution");
  add_io(transform);
  add_pipeline(transform);

  auto* score = app.add_subcommand("score", "Per-sentence polarity scores (CSV)");
  add_io(score);
  add_pipeline(score);
  add_sampling(score);
  score->add_option("--modes", modes, "plain, invert_next, antonymize")->delimiter(',');

  auto* eval = app.add_subcommand("eval", "Correlation matrix between score series (CSV)");
  eval->add_option("input", common.input, "Input corpus")->required();
  add_pipeline(eval);
  add_sampling(eval);
  eval->add_option("--modes", modes, "plain, invert_next, antonymize")->delimiter(',');
  eval->add_option("--external", externals, "Line-aligned score file (repeatable)");
  eval->add_option("--matrix", matrix_path, "Correlation matrix CSV output");
  eval->add_option("--pairs", pairs_path, "Per-sentence scores CSV output");

  auto* validate = app.add_subcommand("validate", "Check a fixture tree for consistency");
  validate->add_option("dir", fixtures_dir, "Fixture root (lexicons/, corpus/, gold/)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decontract) return run_decontract(common);
    if (*detect) return run_records(common, true);
    if (*transform) return run_records(common, false);
    if (*score) return run_score(common, modes, sampling);
    if (*eval) return run_eval(common, modes, externals, sampling, matrix_path, pairs_path);
    if (*validate) return run_validate(fixtures_dir);
  } catch (const StatusError& e) {
    std::cerr << "negare: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
