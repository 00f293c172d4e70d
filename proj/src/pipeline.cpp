#include "negare/pipeline.hpp"

namespace negare {

Pipeline Pipeline::open(const std::filesystem::path& lexicon_dir, LexiconOptions options) {
  LexiconStore lexicons = LexiconStore::load_directory(lexicon_dir, options);
  std::error_code ec;
  const auto tags = lexicon_dir / "tags.tsv";
  TagLexicon tag_lexicon = std::filesystem::is_regular_file(tags, ec) ? TagLexicon::load(tags)
                                                                      : TagLexicon();
  return Pipeline(std::move(lexicons), LexiconTagger(std::move(tag_lexicon)));
}

Sentence Pipeline::prepare(std::string_view text) const {
  Sentence sentence = tokenize(decontract(text, lexicons_.contractions()));
  tagger_.tag(sentence);
  return sentence;
}

TransformResult Pipeline::transform(std::string_view text) const {
  return resolve_negation(prepare(text), lexicons_);
}

TextScore Pipeline::score(std::string_view text, ScoreMode mode) const {
  return score_sentence(prepare(text), mode, lexicons_);
}

}  // namespace negare
