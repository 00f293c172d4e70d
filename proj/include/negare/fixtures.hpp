#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace negare {

struct Violation {
  std::string file;
  std::size_t line = 0;  // 0 when not tied to a line
  std::string message;
};

// Checks a fixture tree (lexicons/, corpus/, gold/):
//  - every lexicon, corpus and gold file parses;
//  - every word a gold pair introduces is an antonym of a word in its input;
//  - every word right after a cue in a gold input has a tag lexicon entry;
//  - running the pipeline on each gold input reproduces the expected output
//    and number of kept cues.
std::vector<Violation> validate_fixtures(const std::filesystem::path& root);

std::string format_violation(const Violation& v);

}  // namespace negare
