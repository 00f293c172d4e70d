#include "negare/eval.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "negare/error.hpp"
#include "negare/pipeline.hpp"
#include "test_util.hpp"

namespace negare {
namespace {

using Vec = std::vector<double>;

// Textbook Σ formula:
// (nΣxy - ΣxΣy) / sqrt((nΣx² - (Σx)²)(nΣy² - (Σy)²)).
double sigma_oracle(const Vec& x, const Vec& y) {
  long double n = x.size(), sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
  }
  return static_cast<double>((n * sxy - sx * sy) /
                             std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy)));
}

double r(const Vec& x, const Vec& y) { return pearson(x, y).value(); }

const Pipeline& pipeline() {
  static const Pipeline p = Pipeline::open(testing::lexicon_dir());
  return p;
}

TEST(PearsonTest, Examples) {
  EXPECT_DOUBLE_EQ(r({1, 2, 3}, {1, 2, 3}), 1.0);
  EXPECT_DOUBLE_EQ(r({1, 2, 3}, {3, 2, 1}), -1.0);
  // By hand: Σx=10 Σy=15 Σxy=40 Σx²=30 Σy²=61, n=4:
  // (160-150)/sqrt((120-100)(244-225)) = 10/sqrt(380) = 0.7181848464596079.
  EXPECT_NEAR(sigma_oracle({1, 2, 3, 4}, {2, 4, 5, 4}), 0.7181848464596079, 1e-15);
  EXPECT_NEAR(r({1, 2, 3, 4}, {2, 4, 5, 4}), 0.7181848464596079, 1e-12);
}

TEST(PearsonTest, Errors) {
  EXPECT_THROW(pearson(Vec{1, 2}, Vec{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(pearson(Vec{1}, Vec{1}), std::invalid_argument);
  EXPECT_THROW(pearson(Vec{}, Vec{}), std::invalid_argument);
  EXPECT_THROW(pearson(Vec{1, NAN}, Vec{1, 2}), std::invalid_argument);
  EXPECT_THROW(pearson(Vec{1, 2}, Vec{1, INFINITY}), std::invalid_argument);
  EXPECT_EQ(pearson(Vec{1, 1, 1}, Vec{1, 2, 3}), std::nullopt);
  EXPECT_EQ(pearson(Vec{0, 0}, Vec{0, 0}), std::nullopt);
}

Vec random_series(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vec v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

TEST(PearsonPropertiesTest, RandomSeries) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> scale(0.01, 100.0), shift(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 2 + rng() % 40;
    Vec x = random_series(rng, n), y = random_series(rng, n);
    double rxy = r(x, y);
    ASSERT_LE(std::abs(rxy), 1.0);
    ASSERT_NEAR(r(x, x), 1.0, 1e-12);
    ASSERT_EQ(rxy, r(y, x));
    Vec neg(n), affine(n);
    double a = scale(rng), b = shift(rng);
    for (std::size_t k = 0; k < n; ++k) {
      neg[k] = -x[k];
      affine[k] = a * x[k] + b;
    }
    ASSERT_NEAR(r(x, neg), -1.0, 1e-12);
    ASSERT_NEAR(r(affine, y), rxy, 1e-9);
    ASSERT_NEAR(rxy, sigma_oracle(x, y), 1e-9);
  }
}

TEST(CorrelationMatrixTest, StructureAndCsv) {
  std::vector<ScoreSeries> series = {
      {"a", {1, 2, 3, 4}}, {"b", {2, 4, 5, 4}}, {"flat", {0, 0, 0, 0}}, {"c", {4, 3, 2, 1}}};
  auto m = CorrelationMatrix::compute(series);
  ASSERT_EQ(m.size(), 4u);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m.at(i, j), m.at(j, i));
    if (i != 2) EXPECT_NEAR(*m.at(i, i), 1.0, 1e-12);
  }
  EXPECT_EQ(m.find("flat", "flat"), std::nullopt);
  EXPECT_EQ(m.find("a", "flat"), std::nullopt);
  EXPECT_DOUBLE_EQ(*m.find("a", "c"), -1.0);

  std::string csv = m.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "label,a,b,flat,c");
  EXPECT_NE(csv.find("\na,1.000000,0.718185,NA,-1.000000\n"), std::string::npos) << csv;

  // The CSV holds six decimals; re-parsed cells equal the rounded values.
  auto back = CorrelationMatrix::parse_csv(csv);
  ASSERT_EQ(back.labels(), m.labels());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      ASSERT_EQ(back.at(i, j).has_value(), m.at(i, j).has_value());
      if (m.at(i, j)) EXPECT_NEAR(*back.at(i, j), std::round(*m.at(i, j) * 1e6) / 1e6, 1e-9);
    }
  EXPECT_EQ(back.to_csv(), csv);

  EXPECT_THROW(CorrelationMatrix::parse_csv("x,a\na,1\n"), FileError);
  EXPECT_THROW(CorrelationMatrix::parse_csv("label,a\na,one\n"), FileError);
  EXPECT_THROW(CorrelationMatrix::compute({{"a", {1, 2}}, {"b", {1, 2, 3}}}), std::invalid_argument);
}

TEST(SampleTest, Examples) {
  std::vector<CorpusRecord> corpus;
  for (int i = 0; i < 10; ++i) corpus.push_back({std::to_string(i), "t", std::nullopt});
  auto whole = sample_corpus(corpus, 1.0, 5);
  ASSERT_EQ(whole.size(), 10u);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(whole[i].id, std::to_string(i));

  auto a = sample_indices(100, 0.3, 7);
  EXPECT_EQ(a.size(), 30u);
  EXPECT_EQ(a, sample_indices(100, 0.3, 7));
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_NE(a, sample_indices(100, 0.3, 8));
  // Cross-checked against a separate mt19937_64 implementation.
  EXPECT_EQ(a, (std::vector<std::size_t>{2,  5,  6,  7,  15, 18, 21, 23, 27, 28, 29, 30, 33, 34, 40,
                                                51, 52, 53, 54, 65, 67, 73, 75, 80, 86, 87, 91, 93, 94, 98}));

  EXPECT_EQ(sample_indices(10, 0.01, 1).size(), 2u);
  EXPECT_THROW(sample_indices(10, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(sample_indices(10, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(sample_indices(10, -0.2, 1), std::invalid_argument);
}

TEST(SamplePropertiesTest, DistinctInRange) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 2 + rng() % 200;
    double f = (1 + rng() % 1000) / 1000.0;
    auto s = sample_indices(n, f, rng());
    ASSERT_GE(s.size(), 2u);
    ASSERT_LE(s.size(), n);
    ASSERT_TRUE(std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end());
    ASSERT_LT(s.back(), n);
  }
}

TEST(ReadScoreFileTest, ParsesAndReportsLines) {
  testing::TempDir dir;
  EXPECT_EQ(read_score_file(dir.write("s.txt", "0.5\n-1\n\n  2e-1 \n")), (Vec{0.5, -1, 0.2}));
  try {
    read_score_file(dir.write("bad.txt", "0.5\nhigh\n"));
    FAIL();
  } catch (const FileError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.line(), 2u);
  }
}

std::vector<CorpusRecord> first_n(std::vector<CorpusRecord> corpus, std::size_t n, bool gold) {
  corpus.resize(n);
  if (!gold)
    for (auto& r : corpus) r.gold_label.reset();
  return corpus;
}

TEST(EvaluateTest, FourByFourWithoutGold) {
  auto corpus = first_n(read_corpus(testing::fixtures_dir() / "corpus" / "eval.jsonl"), 30, false);
  auto report = evaluate(pipeline(), corpus, {});
  EXPECT_EQ(report.matrix.labels(),
            (std::vector<std::string>{"plain-original", "plain-transformed",
                                      "antonymize-original", "antonymize-transformed"}));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(*report.matrix.at(i, i), 1.0, 1e-12);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(report.matrix.at(i, j), report.matrix.at(j, i));
  }
  // Antonymize already resolves negations, so rewriting first changes nothing.
  EXPECT_EQ(*report.matrix.find("antonymize-original", "antonymize-transformed"), 1.0);
  EXPECT_EQ(*report.matrix.find("antonymize-original", "plain-transformed"), 1.0);

  auto csv = report.pairs_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "index,sentence_id,plain-original,plain-transformed,antonymize-original,"
            "antonymize-transformed");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 31);
}

TEST(EvaluateTest, GoldSeriesComesFirst) {
  auto corpus = read_corpus(testing::fixtures_dir() / "corpus" / "eval.jsonl");
  auto report = evaluate(pipeline(), corpus, {});
  EXPECT_EQ(report.matrix.labels().front(), "gold");
  EXPECT_EQ(report.matrix.size(), 5u);
}

TEST(EvaluateTest, CueFreeCorpusIsIdentity) {
  auto corpus = read_corpus(testing::fixtures_dir() / "corpus" / "cue_free.jsonl");
  EvalOptions options;
  options.modes = {ScoreMode::kPlain, ScoreMode::kInvertNext, ScoreMode::kAntonymize};
  auto report = evaluate(pipeline(), corpus, options);
  for (const char* mode : {"plain", "invert_next", "antonymize"}) {
    auto cell = report.matrix.find(std::string(mode) + "-original", std::string(mode) + "-transformed");
    ASSERT_TRUE(cell.has_value());
    EXPECT_EQ(*cell, 1.0);
  }
}

TEST(EvaluateTest, ExternalFiles) {
  testing::TempDir dir;
  std::vector<CorpusRecord> corpus = {
      {"a", "good", std::nullopt}, {"b", "not good", std::nullopt}, {"c", "bad", std::nullopt}};
  EvalOptions options;
  options.external_files = {dir.write("vader.txt", "0.4\n-0.3\n-0.6\n")};
  auto report = evaluate(pipeline(), corpus, options);
  EXPECT_EQ(report.matrix.labels().back(), "vader");

  options.external_files = {dir.write("short.txt", "0.4\n-0.3\n")};
  try {
    evaluate(pipeline(), corpus, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlignment);
    EXPECT_NE(std::string(e.what()).find("short.txt"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("expected 3"), std::string::npos);
  }

  // Alignment is checked against the full corpus, then sampled with it.
  options.external_files = {dir.write("vader.txt", "0.4\n-0.3\n-0.6\n")};
  options.sample_fraction = 0.6;
  options.seed = 3;
  report = evaluate(pipeline(), corpus, options);
  ASSERT_EQ(report.records.size(), 2u);
  const Vec all = {0.4, -0.3, -0.6};
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(report.series.back().values[i], all[report.positions[i]]);
}

TEST(EvaluateTest, UsageErrors) {
  std::vector<CorpusRecord> one = {{"a", "good", std::nullopt}};
  try {
    evaluate(pipeline(), one, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUsage);
  }
  std::vector<CorpusRecord> two = {{"a", "good", std::nullopt}, {"b", "bad", std::nullopt}};
  EvalOptions options;
  options.sample_fraction = 2.0;
  EXPECT_THROW(evaluate(pipeline(), two, options), Error);
  options = {};
  options.modes = {};
  EXPECT_THROW(evaluate(pipeline(), two, options), Error);
}

TEST(EvaluateTest, JobsDoNotChangeResults) {
  auto corpus = read_corpus(testing::fixtures_dir() / "corpus" / "eval.jsonl");
  EvalOptions one, four;
  one.modes = four.modes = {ScoreMode::kPlain, ScoreMode::kInvertNext, ScoreMode::kAntonymize};
  four.jobs = 4;
  auto a = evaluate(pipeline(), corpus, one);
  auto b = evaluate(pipeline(), corpus, four);
  EXPECT_EQ(a.matrix.to_csv(), b.matrix.to_csv());
  EXPECT_EQ(a.pairs_csv(), b.pairs_csv());
}

}  // namespace
}  // namespace negare
