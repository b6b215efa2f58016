#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fqnres/source_span.hpp"

namespace fqnres::frontend {

enum class TokenKind {
  Identifier,
  Keyword,
  IntLiteral,
  LongLiteral,
  FloatLiteral,
  DoubleLiteral,
  CharLiteral,
  StringLiteral,
  Operator,  // punctuation and operators
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // raw spelling
  SourceSpan span;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_op(std::string_view t) const { return is(TokenKind::Operator, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

/// Splits Java-subset source into tokens, dropping whitespace and comments.
/// The final token is always End. Throws fqnres::SyntaxError on unterminated
/// literals/comments and stray characters.
std::vector<Token> lex(std::string_view source);

bool is_java_keyword(std::string_view word) noexcept;

}  // namespace fqnres::frontend
