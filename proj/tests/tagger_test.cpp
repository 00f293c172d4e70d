#include "negare/tagger.hpp"

#include <gtest/gtest.h>

#include <random>

#include "negare/error.hpp"
#include "negare/normalize.hpp"
#include "test_util.hpp"

namespace negare {
namespace {

const LexiconTagger& fixture_tagger() {
  static const LexiconTagger tagger(TagLexicon::load(testing::lexicon_dir() / "tags.tsv"));
  return tagger;
}

std::vector<std::string> tags_of(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(t.tag);
  return out;
}

std::string tag_one(const std::string& word) {
  return fixture_tagger().tag_tokens(tokenize(word)).tokens.at(0).tag;
}

TEST(TagTokensTest, Examples) {
  EXPECT_EQ(tag_one("good"), "JJ");
  EXPECT_EQ(tag_one("attend"), "VB");
  EXPECT_EQ(tag_one("blorping"), "VBG");
}

TEST(TagTokensTest, FallbackOrder) {
  auto s = fixture_tagger().tag_tokens(tokenize("Blorping Zed wobbled 42 quickly, yes."));
  EXPECT_EQ(tags_of(s),
            (std::vector<std::string>{"VBG", "NNP", "VBN", "CD", "RB", ",", "NN", "."}));
  // Sentence-initial capitals are not taken as proper nouns.
  EXPECT_EQ(tag_one("Zed"), "NN");
  // A lexicon entry wins over the capitalization rule.
  EXPECT_EQ(fixture_tagger().tag_tokens(tokenize("It is Good")).tokens[2].tag, "JJ");
}

TEST(TagLexiconTest, LongestSuffixFirst) {
  TagLexicon lexicon({}, {{"s", "NNS"}, {"ness", "NN"}, {"less", "JJ"}});
  EXPECT_EQ(*lexicon.match_suffix("hopeless"), "JJ");
  EXPECT_EQ(*lexicon.match_suffix("kindness"), "NN");
  EXPECT_EQ(*lexicon.match_suffix("cats"), "NNS");
  EXPECT_EQ(lexicon.match_suffix("cat"), nullptr);
  // A suffix must leave a stem of at least two letters.
  EXPECT_EQ(TagLexicon().match_suffix("sing"), nullptr);
  EXPECT_EQ(*TagLexicon().match_suffix("going"), "VBG");
  EXPECT_EQ(LexiconTagger().tag_word(make_token("bed", 0)), "NN");
  EXPECT_EQ(LexiconTagger().tag_word(make_token("bored", 0)), "VBN");
}

TEST(TagLexiconTest, LoadRejectsBadRows) {
  testing::TempDir dir;
  dir.write("tags.tsv", "good\tJJ\nbad\tADJ\n");
  try {
    TagLexicon::load(dir / "tags.tsv");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  dir.write("tags.tsv", "good\n");
  EXPECT_THROW(TagLexicon::load(dir / "tags.tsv"), LexiconError);
  EXPECT_TRUE(is_valid_ptb_tag("VBG"));
  EXPECT_FALSE(is_valid_ptb_tag("vbg"));
}

TEST(TagCorpusTest, Examples) {
  EXPECT_TRUE(fixture_tagger().tag_corpus({}).empty());
  auto tagged = fixture_tagger().tag_corpus({tokenize("good day"), tokenize("not working")});
  ASSERT_EQ(tagged.size(), 2u);
  EXPECT_EQ(tagged[0].raw, "good day");
  EXPECT_EQ(tagged[1].tokens[1].tag, "VBG");
}

TEST(TagCorpusTest, PretaggedTagsPreserved) {
  auto sentences = read_pretagged(testing::fixtures_dir() / "corpus" / "pretagged.conll");
  ASSERT_EQ(sentences.size(), 2u);
  EXPECT_EQ(sentences[0].raw, "The warden is not good");
  auto tagged = fixture_tagger().tag_corpus(sentences);
  // The file tags "good" as NN; the lexicon says JJ.
  EXPECT_EQ(tagged[0].tokens[4].tag, "NN");
  EXPECT_EQ(tags_of(tagged[1]), (std::vector<std::string>{"DT", "NN", "VBZ", "RB", "JJ", "."}));
  EXPECT_TRUE(tagged[1].tokens[5].joined);
}

TEST(TagCorpusTest, PretaggedParseErrors) {
  try {
    parse_pretagged("The\tDT\nwarden NN\n", "x.conll");
    FAIL();
  } catch (const FileError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_pretagged("The\tXX\n"), FileError);
  EXPECT_EQ(parse_pretagged("\n\nA\tDT\n\n\nB\tNN\n").size(), 2u);
}

TEST(TaggerPropertiesTest, TotalDeterministicAndContextFree) {
  const auto& tagger = fixture_tagger();
  std::vector<std::string> vocab;
  for (const auto& [word, tag] : tagger.lexicon().entries()) vocab.push_back(word);
  std::sort(vocab.begin(), vocab.end());
  vocab.insert(vocab.end(), {"Zorb", "blorping", "x", "7", ".", ",", "GOOD", "Not"});

  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  for (int i = 0; i < 500; ++i) {
    std::vector<Token> tokens;
    for (int n = static_cast<int>(rng() % 12); n > 0; --n)
      tokens.push_back(make_token(vocab[pick(rng)], tokens.size()));
    Sentence s = rebuild(tokens);
    Sentence a = tagger.tag_tokens(s);
    Sentence b = tagger.tag_tokens(s);
    ASSERT_EQ(a.size(), s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      ASSERT_TRUE(a.tokens[k].tagged());
      ASSERT_EQ(a.tokens[k].tag, b.tokens[k].tag);
      ASSERT_EQ(a.tokens[k].surface, s.tokens[k].surface);
      if (const auto* entry = tagger.lexicon().find(s.tokens[k].norm)) {
        ASSERT_EQ(a.tokens[k].tag, *entry) << s.tokens[k].surface;
      }
    }
  }
}

}  // namespace
}  // namespace negare
