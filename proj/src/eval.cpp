#include "negare/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "negare/error.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace negare {
namespace {

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool parse_double(std::string_view text, double& value) {
  text = detail::trim(text);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

// Unbiased draw from [0, bound) on top of the fully specified mt19937_64, so
// samples are identical across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pearson: series lengths differ (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  if (x.size() < 2) throw std::invalid_argument("pearson: need at least 2 values");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw std::invalid_argument("pearson: non-finite value");

  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double d) { return d == v.front(); });
  };
  if (constant(x) || constant(y)) return std::nullopt;
  if (std::equal(x.begin(), x.end(), y.begin())) return 1.0;

  const double n = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  const double r = sxy / (std::sqrt(sxx) * std::sqrt(syy));
  return std::clamp(r, -1.0, 1.0);
}

CorrelationMatrix::CorrelationMatrix(std::vector<std::string> labels,
                                     std::vector<std::optional<double>> cells)
    : labels_(std::move(labels)), cells_(std::move(cells)) {
  if (cells_.size() != labels_.size() * labels_.size())
    throw std::invalid_argument("correlation matrix must be square");
}

CorrelationMatrix CorrelationMatrix::compute(const std::vector<ScoreSeries>& series) {
  const std::size_t k = series.size();
  std::vector<std::string> labels;
  for (const auto& s : series) {
    if (s.values.size() != series.front().values.size())
      throw std::invalid_argument("series '" + s.label + "' has " + std::to_string(s.values.size()) +
                                  " values, expected " +
                                  std::to_string(series.front().values.size()));
    labels.push_back(s.label);
  }
  std::vector<std::optional<double>> cells(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      auto r = pearson(series[i].values, series[j].values);
      cells[i * k + j] = r;
      cells[j * k + i] = r;
    }
  }
  return CorrelationMatrix(std::move(labels), std::move(cells));
}

std::optional<double> CorrelationMatrix::find(std::string_view row, std::string_view col) const {
  auto index = [&](std::string_view label) {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::out_of_range("no series '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  };
  return at(index(row), index(col));
}

std::string CorrelationMatrix::to_csv() const {
  std::string out = "label";
  for (const auto& label : labels_) out += "," + csv_field(label);
  out += "\n";
  for (std::size_t i = 0; i < size(); ++i) {
    out += csv_field(labels_[i]);
    for (std::size_t j = 0; j < size(); ++j) {
      const auto& cell = at(i, j);
      out += "," + (cell ? fixed6(*cell) : std::string("NA"));
    }
    out += "\n";
  }
  return out;
}

CorrelationMatrix CorrelationMatrix::parse_csv(std::string_view csv) {
  auto fail = [](std::size_t line, const std::string& msg) {
    return FileError(ErrorCode::kParse, "<matrix csv>", line, msg);
  };
  std::vector<std::vector<std::string_view>> rows;
  for (std::string_view line : detail::split(csv, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) rows.push_back(detail::split(line, ','));
  }
  if (rows.empty() || rows[0].empty() || rows[0][0] != "label") throw fail(1, "missing header");

  std::vector<std::string> labels(rows[0].begin() + 1, rows[0].end());
  const std::size_t k = labels.size();
  if (rows.size() != k + 1) throw fail(rows.size(), "expected " + std::to_string(k) + " rows");

  std::vector<std::optional<double>> cells;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != k + 1 || row[0] != labels[i])
      throw fail(i + 2, "row does not match header");
    for (std::size_t j = 1; j <= k; ++j) {
      if (row[j] == "NA") {
        cells.emplace_back(std::nullopt);
        continue;
      }
      double value = 0.0;
      if (!parse_double(row[j], value)) throw fail(i + 2, "bad value '" + std::string(row[j]) + "'");
      cells.emplace_back(value);
    }
  }
  return CorrelationMatrix(std::move(labels), std::move(cells));
}

std::vector<std::size_t> sample_indices(std::size_t n, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::invalid_argument("sample fraction must be in (0, 1]");

  std::size_t k = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  k = std::min(n, std::max<std::size_t>(k, 2));

  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first k slots end up a uniform sample.
  for (std::size_t i = 0; i < k && k < n; ++i) {
    std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<CorpusRecord> sample_corpus(const std::vector<CorpusRecord>& corpus, double fraction,
                                        std::uint64_t seed) {
  std::vector<CorpusRecord> out;
  for (std::size_t i : sample_indices(corpus.size(), fraction, seed)) out.push_back(corpus[i]);
  return out;
}

std::vector<double> read_score_file(const std::filesystem::path& path) {
  const std::string origin = path.string();
  std::string content = detail::read_file(origin, ErrorCode::kIo);
  std::vector<double> values;
  std::size_t number = 0;
  for (std::string_view line : detail::split(content, '\n')) {
    ++number;
    if (detail::trim(line).empty()) continue;
    double value = 0.0;
    if (!parse_double(line, value) || !std::isfinite(value))
      throw FileError(ErrorCode::kParse, origin, number,
                      "expected a decimal number, got '" + std::string(detail::trim(line)) + "'");
    values.push_back(value);
  }
  return values;
}

std::string EvalReport::pairs_csv() const {
  std::string out = "index,sentence_id";
  for (const auto& s : series) out += "," + csv_field(s.label);
  out += "\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out += std::to_string(positions[i]) + "," + csv_field(records[i].id);
    for (const auto& s : series) out += "," + fixed6(s.values[i]);
    out += "\n";
  }
  return out;
}

EvalReport evaluate(const Pipeline& pipeline, const std::vector<CorpusRecord>& corpus,
                    const EvalOptions& options) {
  if (options.modes.empty()) throw Error(ErrorCode::kUsage, "no scoring modes given");
  std::vector<ScoreMode> modes;
  for (ScoreMode m : options.modes)
    if (std::find(modes.begin(), modes.end(), m) == modes.end()) modes.push_back(m);

  // External files align with the corpus as given, before any sampling.
  std::vector<ScoreSeries> external;
  for (const auto& path : options.external_files) {
    ScoreSeries s{path.stem().string(), read_score_file(path)};
    if (s.values.size() != corpus.size())
      throw Error(ErrorCode::kAlignment, path.string() + ": expected " +
                                             std::to_string(corpus.size()) + " scores, got " +
                                             std::to_string(s.values.size()));
    external.push_back(std::move(s));
  }

  EvalReport report;
  if (options.sample_fraction) {
    try {
      report.positions = sample_indices(corpus.size(), *options.sample_fraction, options.seed);
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::kUsage, e.what());
    }
  } else {
    for (std::size_t i = 0; i < corpus.size(); ++i) report.positions.push_back(i);
  }
  for (std::size_t p : report.positions) report.records.push_back(corpus[p]);

  const std::size_t n = report.records.size();
  if (n < 2) throw Error(ErrorCode::kUsage, "evaluation needs at least 2 sentences");

  std::vector<TransformResult> transformed(n);
  detail::parallel_for(n, options.jobs, [&](std::size_t i) {
    transformed[i] = pipeline.transform(report.records[i].text);
  });

  const bool all_gold = std::all_of(report.records.begin(), report.records.end(),
                                    [](const CorpusRecord& r) { return r.gold_label.has_value(); });
  if (all_gold) {
    ScoreSeries gold{"gold", {}};
    for (const auto& r : report.records) gold.values.push_back(*r.gold_label);
    report.series.push_back(std::move(gold));
  }

  const auto& lexicons = pipeline.lexicons();
  for (ScoreMode mode : modes) {
    ScoreSeries original{std::string(to_string(mode)) + "-original", std::vector<double>(n)};
    ScoreSeries rewritten{std::string(to_string(mode)) + "-transformed", std::vector<double>(n)};
    detail::parallel_for(n, options.jobs, [&](std::size_t i) {
      original.values[i] = score_sentence(transformed[i].original, mode, lexicons).value;
      rewritten.values[i] = score_sentence(transformed[i].transformed, mode, lexicons).value;
    });
    report.series.push_back(std::move(original));
    report.series.push_back(std::move(rewritten));
  }

  for (auto& s : external) {
    ScoreSeries picked{s.label, {}};
    for (std::size_t p : report.positions) picked.values.push_back(s.values[p]);
    report.series.push_back(std::move(picked));
  }

  for (std::size_t i = 0; i < report.series.size(); ++i) {
    if (report.series[i].label.find(',') != std::string::npos)
      throw Error(ErrorCode::kUsage, "series label '" + report.series[i].label + "' contains a comma");
    for (std::size_t j = 0; j < i; ++j)
      if (report.series[i].label == report.series[j].label)
        throw Error(ErrorCode::kUsage, "duplicate series label '" + report.series[i].label + "'");
  }

  report.matrix = CorrelationMatrix::compute(report.series);
  return report;
}

}  // namespace negare
