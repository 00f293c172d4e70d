#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negare {

// Numeric values are shared with the C API status codes and the CLI exit codes.
enum class ErrorCode : int {
  kUsage = 1,
  kIo = 2,
  kLexicon = 3,
  kParse = 4,
  kAlignment = 5,
  kInternal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A lexicon or corpus file failed to load. `line` is 1-based, 0 when the
// problem concerns the file as a whole.
class FileError : public Error {
 public:
  FileError(ErrorCode code, std::string file, std::size_t line,
            const std::string& message)
      : Error(code, format(file, line, message)),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& file, std::size_t line,
                            const std::string& message) {
    std::string out = file;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + message;
  }

  std::string file_;
  std::size_t line_;
};

// A resource file broke a lexicon invariant.
class LexiconError : public FileError {
 public:
  enum class Kind { kMissing, kParse, kDuplicate, kEmptySource, kInvalidValue };

  LexiconError(Kind kind, std::string file, std::size_t line, const std::string& message)
      : FileError(ErrorCode::kLexicon, std::move(file), line, message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace negare
