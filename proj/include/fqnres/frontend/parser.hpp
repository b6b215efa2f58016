#pragma once

#include <string>
#include <string_view>

#include "fqnres/frontend/ast.hpp"

namespace fqnres::frontend {

enum class Origin { Freestanding, Wrapped };

/// How much scaffolding a freestanding snippet needed.
enum class WrapLevel {
  None,        // already a compilation unit
  ClassBody,   // member declarations, wrapped in a synthetic class
  MethodBody,  // statements, wrapped in a synthetic class and method
};

inline constexpr std::string_view kSnippetClass = "__Snippet";
inline constexpr std::string_view kSnippetMethod = "__run";

/// A code snippet and the compilation unit it is analysed as.
///
/// Parsing always works on the original text, so spans refer to `source`.
/// `wrapped_source` is the equivalent standalone compilation unit.
struct Snippet {
  std::string source;
  Origin origin = Origin::Freestanding;
  WrapLevel level = WrapLevel::None;
  std::string wrapped_source;
  std::size_t body_offset = 0;  // where the wrapper opens in `source`
};

/// Decides how `source` has to be wrapped, trying a compilation unit, then
/// statements, then class members. With `allow_wrapping` false only a
/// complete compilation unit is accepted. Throws SyntaxError (the error from
/// the attempt that got furthest) or fqnres::Error for empty input.
Snippet wrap(std::string_view source, bool allow_wrapping = true);

struct Ast {
  CompilationUnit unit;
  Origin origin = Origin::Freestanding;
  WrapLevel level = WrapLevel::None;
  int expr_count = 0;
};

Ast parse(const Snippet& snippet);

inline constexpr int kMaxNesting = 200;

}  // namespace fqnres::frontend
