#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negare/corpus.hpp"
#include "negare/pipeline.hpp"
#include "negare/sentiment.hpp"

namespace negare {

struct ScoreSeries {
  std::string label;
  std::vector<double> values;
};

// Pearson product-moment correlation. nullopt when either series is
// constant (the coefficient is undefined). Throws std::invalid_argument on
// a length mismatch, fewer than two values, or non-finite input.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

class CorrelationMatrix {
 public:
  CorrelationMatrix() = default;
  CorrelationMatrix(std::vector<std::string> labels, std::vector<std::optional<double>> cells);

  // Throws std::invalid_argument unless every series has the same length
  // (at least 2) and finite values.
  static CorrelationMatrix compute(const std::vector<ScoreSeries>& series);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<double>& at(std::size_t row, std::size_t col) const {
    return cells_.at(row * labels_.size() + col);
  }
  std::optional<double> find(std::string_view row, std::string_view col) const;

  // Header `label,<labels...>`, then `label,r1,r2,...` rows with six
  // decimals; undefined cells are `NA`.
  std::string to_csv() const;
  // Throws FileError(kParse).
  static CorrelationMatrix parse_csv(std::string_view csv);

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<double>> cells_;
};

// Indices (ascending) of a seeded pseudo-random sample of
// round(fraction * n) items, at least 2 and at most n. Throws
// std::invalid_argument unless 0 < fraction <= 1.
std::vector<std::size_t> sample_indices(std::size_t n, double fraction, std::uint64_t seed);

std::vector<CorpusRecord> sample_corpus(const std::vector<CorpusRecord>& corpus, double fraction,
                                        std::uint64_t seed);

// One decimal per non-blank line. Throws FileError(kIo / kParse).
std::vector<double> read_score_file(const std::filesystem::path& path);

struct EvalOptions {
  std::vector<ScoreMode> modes = {ScoreMode::kPlain, ScoreMode::kAntonymize};
  // Externally produced scores, line-aligned with the full corpus. The file
  // stem becomes the series label.
  std::vector<std::filesystem::path> external_files;
  std::optional<double> sample_fraction;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct EvalReport {
  // Records actually evaluated, with their positions in the input corpus.
  std::vector<CorpusRecord> records;
  std::vector<std::size_t> positions;
  std::vector<ScoreSeries> series;
  CorrelationMatrix matrix;

  // `index,sentence_id,<series labels...>`.
  std::string pairs_csv() const;
};

// Series order: "gold" (when every record carries a gold label), then
// "<mode>-original" and "<mode>-transformed" per mode, then external files.
// Throws Error(kAlignment) for a misaligned score file and Error(kUsage) for
// bad options.
EvalReport evaluate(const Pipeline& pipeline, const std::vector<CorpusRecord>& corpus,
                    const EvalOptions& options);

}  // namespace negare
