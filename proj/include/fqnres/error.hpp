#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqnres/source_span.hpp"

namespace fqnres {

/// Base class for every error raised by the library. Messages are complete
/// diagnostics; callers print what() without further decoration.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line-oriented input file (class listing, ground truth, KB dump) failed
/// to parse.
class FormatError : public Error {
 public:
  FormatError(std::string file, std::size_t line, const std::string& reason)
      : Error(file + ":" + std::to_string(line) + ": " + reason),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class XmlError : public Error {
 public:
  XmlError(std::string file, std::size_t byte_offset, const std::string& reason)
      : Error(file + ": byte " + std::to_string(byte_offset) + ": " + reason),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourcePos pos, std::string reason, std::vector<std::string> expected)
      : Error(format(pos, reason, expected)),
        pos_(pos),
        reason_(std::move(reason)),
        expected_(std::move(expected)) {}

  const SourcePos& pos() const noexcept { return pos_; }
  const std::string& reason() const noexcept { return reason_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(const SourcePos& pos, const std::string& reason,
                            const std::vector<std::string>& expected) {
    std::string msg = std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                      ": syntax error: " + reason;
    if (!expected.empty()) {
      msg += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
      msg += ")";
    }
    return msg;
  }

  SourcePos pos_;
  std::string reason_;
  std::vector<std::string> expected_;
};

/// Semantic failure during local type inference, e.g. an undeclared variable.
class AnalysisError : public Error {
 public:
  AnalysisError(std::string identifier, SourceSpan span, const std::string& reason)
      : Error(span.str() + ": " + reason + " '" + identifier + "'"),
        identifier_(std::move(identifier)),
        span_(span) {}

  const std::string& identifier() const noexcept { return identifier_; }
  const SourceSpan& span() const noexcept { return span_; }

 private:
  std::string identifier_;
  SourceSpan span_;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace fqnres
