#include "negare/negation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>

#include "negare/pipeline.hpp"
#include "test_util.hpp"

namespace negare {
namespace {

const Pipeline& pipeline() {
  static const Pipeline p = Pipeline::open(testing::lexicon_dir());
  return p;
}
const LexiconStore& store() { return pipeline().lexicons(); }

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string transform(const std::string& text) { return pipeline().transform(text).transformed.raw; }

TEST(DetectNegationsTest, Examples) {
  EXPECT_EQ(detect_negations(tokenize("The warden is not good"), store()),
            (std::vector<CueMatch>{{3, "not"}}));
  EXPECT_EQ(detect_negations(tokenize("Vaccines are not bad"), store()),
            (std::vector<CueMatch>{{2, "not"}}));
  EXPECT_TRUE(detect_negations(tokenize("All good here"), store()).empty());
  EXPECT_EQ(detect_negations(tokenize("NEVER, not."), store()),
            (std::vector<CueMatch>{{0, "never"}, {2, "not"}}));
}

TEST(ResolveNegationTest, PaperSentences) {
  EXPECT_EQ(transform("The warden is not good"), "The warden is bad");
  EXPECT_EQ(transform("The boy is not dirty"), "The boy is clean");

  auto soldiers = pipeline().transform("Soldiers could never attend a parade");
  EXPECT_EQ(soldiers.transformed.raw, "Soldiers could never attend a parade");
  EXPECT_EQ(soldiers.cues_kept, (std::vector<CueMatch>{{2, "never"}}));
  EXPECT_TRUE(soldiers.edits.empty());

  const std::string husk = "Samuel L. Husk does not work for the Council of Great City Schools.";
  auto result = pipeline().transform(husk);
  EXPECT_EQ(result.transformed.raw, husk);
  EXPECT_EQ(result.original.tokens[6].tag, "VB");
  EXPECT_EQ(result.cues_kept.size(), 1u);
}

TEST(ResolveNegationTest, EditLog) {
  auto r = pipeline().transform("The warden is not good");
  ASSERT_EQ(r.edits.size(), 2u);
  EXPECT_EQ(r.edits[0], (Edit{Edit::Kind::kCueRemoved, 3, "not", ""}));
  EXPECT_EQ(r.edits[1], (Edit{Edit::Kind::kWordReplaced, 4, "good", "bad"}));
  EXPECT_EQ(to_string(Edit::Kind::kCueRemoved), "cue_removed");
  EXPECT_EQ(to_string(Edit::Kind::kWordReplaced), "word_replaced");
}

TEST(ResolveNegationTest, KeptCues) {
  // Final position: nothing to negate.
  auto r = pipeline().transform("I will not");
  EXPECT_EQ(r.transformed.raw, "I will not");
  EXPECT_EQ(r.cues_kept, (std::vector<CueMatch>{{2, "not"}}));
  // Gate passes, no antonym.
  r = pipeline().transform("The car is not new");
  EXPECT_EQ(r.original.tokens[4].tag, "JJ");
  EXPECT_TRUE(store().get_antonyms("new").empty());
  EXPECT_EQ(r.transformed.raw, "The car is not new");
  // Adverb in between.
  EXPECT_EQ(transform("The service was not very good."), "The service was not very good.");
  // Double cue: the first is kept, the second applies.
  r = pipeline().transform("It is never not good.");
  EXPECT_EQ(r.transformed.raw, "It is never bad.");
  EXPECT_EQ(r.cues_kept, (std::vector<CueMatch>{{2, "never"}}));
}

TEST(ResolveNegationTest, CaseAndPunctuation) {
  EXPECT_EQ(transform("Not good."), "Bad.");
  EXPECT_EQ(transform("It was NOT GOOD"), "It was BAD");
  EXPECT_EQ(transform("The test isn't difficult."), "The test is easy.");
  EXPECT_EQ(transform("The road is not safe and the staff were not helpful."),
            "The road is dangerous and the staff were unhelpful.");
}

TEST(ResolveNegationTest, RequiresTags) {
  EXPECT_THROW(resolve_negation(tokenize("not good"), store()), std::invalid_argument);
  auto r = resolve_negation(Sentence{}, store());
  EXPECT_TRUE(r.transformed.empty());
}

TEST(ResolveNegationTest, UsesGivenTags) {
  auto sentences = read_pretagged(testing::fixtures_dir() / "corpus" / "pretagged.conll");
  // "good" tagged NN fails the gate.
  EXPECT_EQ(resolve_negation(sentences[0], store()).transformed.raw, "The warden is not good");
  EXPECT_EQ(resolve_negation(sentences[1], store()).transformed.raw, "The boy is clean.");
}

TEST(AntonymMeanPolarityTest, Examples) {
  // good -> bad (-0.5), awful (-0.7)
  EXPECT_NEAR(antonym_mean_polarity("good", store()), -0.6, 1e-12);
  EXPECT_EQ(antonym_mean_polarity("zzzqx", store()), 0.0);
  EXPECT_EQ(antonym_mean_polarity("honest", store()), store().polarity_of("dishonest"));
}

TEST(SelectAntonymTest, Examples) {
  EXPECT_EQ(store().get_antonyms("good"), (std::vector<std::string>{"bad", "awful"}));
  EXPECT_EQ(select_antonym("good", store()), "bad");
  EXPECT_EQ(select_antonym("honest", store()), "dishonest");
  EXPECT_EQ(select_antonym("zzzqx", store()), std::nullopt);
}

TEST(SelectAntonymTest, ClosestToMean) {
  testing::TempDir dir;
  dir.write("antonyms.tsv", "w\ts\ta,b,c\n");
  dir.write("sentiment.tsv", "a\t-0.9\nb\t-0.2\nc\t-0.4\n");
  auto lex = LexiconStore::load_directory(dir.path());
  // mean = -0.5; c is 0.1 away.
  EXPECT_EQ(select_antonym("w", lex), "c");
}

// Brute-force mean computed straight from the lookup results.
double oracle_mean(const std::string& word, const LexiconStore& lex) {
  std::vector<std::string> seen;
  double sum = 0.0;
  for (const auto& a : lex.get_antonyms(word)) {
    if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
    seen.push_back(a);
    sum += lex.polarity_of(a);
  }
  return seen.empty() ? 0.0 : sum / static_cast<double>(seen.size());
}

std::set<std::string> all_words() {
  std::set<std::string> words;
  for (const auto& w : store().antonym_headwords()) words.insert(w);
  for (const auto& w : store().synonym_headwords()) words.insert(w);
  for (const auto& w : store().sentiment_words()) words.insert(w);
  return words;
}

TEST(NegationPropertiesTest, MeanMatchesOracleAndSelectionIsOptimal) {
  for (const auto& w : all_words()) {
    double mean = antonym_mean_polarity(w, store());
    EXPECT_NEAR(mean, oracle_mean(w, store()), 1e-12) << w;
    auto chosen = select_antonym(w, store());
    auto candidates = store().get_antonyms(w);
    ASSERT_EQ(chosen.has_value(), !candidates.empty()) << w;
    if (!chosen) continue;
    double best = std::abs(store().polarity_of(*chosen) - mean);
    for (const auto& c : candidates)
      EXPECT_FALSE(std::abs(store().polarity_of(c) - mean) < best - 1e-12) << w << " " << c;
  }
}

// Random sentences over the fixture vocabulary plus cues and punctuation.
std::string random_sentence(std::mt19937& rng, const std::vector<std::string>& vocab) {
  static const std::vector<std::string> extra = {"not", "never", "Not", "nor", "isn't", "very",
                                                 ".", "the", "is"};
  std::string out;
  for (int n = 1 + static_cast<int>(rng() % 9); n > 0; --n) {
    const auto& pool = rng() % 3 == 0 ? extra : vocab;
    if (!out.empty()) out += ' ';
    out += pool[rng() % pool.size()];
  }
  return out;
}

TEST(NegationPropertiesTest, RandomSentences) {
  auto words = all_words();
  std::vector<std::string> vocab(words.begin(), words.end());
  std::mt19937 rng(4242);
  for (int i = 0; i < 3000; ++i) {
    std::string text = random_sentence(rng, vocab);
    auto r = pipeline().transform(text);
    const auto& orig = r.original.tokens;

    // Edits come in (cue_removed, word_replaced) pairs on adjacent tokens.
    ASSERT_EQ(r.edits.size() % 2, 0u) << text;
    for (std::size_t e = 0; e < r.edits.size(); e += 2) {
      const auto& cue = r.edits[e];
      const auto& word = r.edits[e + 1];
      ASSERT_EQ(cue.kind, Edit::Kind::kCueRemoved);
      ASSERT_EQ(word.kind, Edit::Kind::kWordReplaced);
      ASSERT_EQ(word.position, cue.position + 1);
      ASSERT_TRUE(store().is_cue(orig[cue.position].norm));
      ASSERT_TRUE(passes_pos_gate(orig[word.position].tag));
      auto antonyms = store().get_antonyms(orig[word.position].norm);
      ASSERT_NE(std::find(antonyms.begin(), antonyms.end(), lower(word.after)), antonyms.end())
          << text;
    }
    ASSERT_EQ(r.transformed.size(), orig.size() - r.edits.size() / 2) << text;

    // A cue survives only if its successor was not rewritable.
    std::size_t cues = detect_negations(r.original, store()).size();
    ASSERT_EQ(cues, r.cues_kept.size() + r.edits.size() / 2) << text;

    bool any_gate = std::any_of(orig.begin(), orig.end(),
                                [](const Token& t) { return passes_pos_gate(t.tag); });
    if (!any_gate) ASSERT_EQ(r.transformed.raw, r.original.raw) << text;

    if (r.cues_kept.empty()) {
      auto again = pipeline().transform(r.transformed.raw);
      ASSERT_EQ(again.transformed.raw, r.transformed.raw) << text;
      ASSERT_TRUE(again.edits.empty());
    }
  }
}

}  // namespace
}  // namespace negare
