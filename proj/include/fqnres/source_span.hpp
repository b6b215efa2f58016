#pragma once

#include <cstddef>
#include <string>

namespace fqnres {

/// 1-based line and byte column, plus 0-based byte offset.
struct SourcePos {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Inclusive range: `last` is the position of the final byte.
struct SourceSpan {
  SourcePos first;
  SourcePos last;

  std::size_t begin() const noexcept { return first.offset; }
  std::size_t end() const noexcept { return last.offset + 1; }

  /// `line:col-line:col`
  std::string str() const {
    return std::to_string(first.line) + ":" + std::to_string(first.column) + "-" +
           std::to_string(last.line) + ":" + std::to_string(last.column);
  }

  static SourceSpan cover(const SourceSpan& a, const SourceSpan& b) { return {a.first, b.last}; }

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

}  // namespace fqnres
