#include "fqnres/frontend/lexer.hpp"

#include <array>
#include <cctype>

#include "fqnres/error.hpp"

namespace fqnres::frontend {
namespace {

constexpr auto kKeywords = std::to_array<std::string_view>({
    "abstract", "assert",    "boolean",  "break",      "byte",      "case",
    "catch",    "char",      "class",    "const",      "continue",  "default",
    "do",       "double",    "else",     "enum",       "extends",   "final",
    "finally",  "float",     "for",      "goto",       "if",        "implements",
    "import",   "instanceof", "int",     "interface",  "long",      "native",
    "new",      "package",   "private",  "protected",  "public",    "return",
    "short",    "static",    "strictfp", "super",      "switch",    "synchronized",
    "this",     "throw",     "throws",   "transient",  "try",       "void",
    "volatile", "while",     "true",     "false",      "null"});

// Longest first so maximal munch works with a linear scan.
constexpr auto kOperators = std::to_array<std::string_view>({
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=",
    "+=",   "-=",  "*=",  "/=",  "%=",  "&=", "|=", "^=", "<<", ">>", "(",  ")",  "{",  "}",  "[",
    "]",    ";",   ",",   ".",   "@",   "=",  ">",  "<",  "!",  "~",  "?",  ":",  "+",  "-",  "*",
    "/"});
constexpr std::string_view kSingleExtra = "&|^%";

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (at_end()) {
        Token end;
        end.kind = TokenKind::End;
        end.span = {pos_, pos_};
        out.push_back(std::move(end));
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    auto i = pos_.offset + ahead;
    return i < src_.size() ? src_[i] : '\0';
  }

  void advance() {
    if (src_[pos_.offset] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }

  [[noreturn]] void fail(SourcePos at, const std::string& why) { throw SyntaxError(at, why, {}); }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        auto start = pos_;
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end()) fail(start, "unterminated comment");
          advance();
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, SourcePos start) {
    Token t;
    t.kind = kind;
    t.text = std::string(src_.substr(start.offset, pos_.offset - start.offset));
    t.span.first = start;
    // Recompute the last byte's position from the start (token never spans a
    // newline except inside comments, which are not tokens).
    t.span.last = start;
    t.span.last.offset = pos_.offset - 1;
    t.span.last.column = start.column + static_cast<int>(pos_.offset - 1 - start.offset);
    return t;
  }

  static bool ident_start(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || c == '_' || c == '$' || u >= 0x80;
  }
  static bool ident_part(char c) {
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  }

  Token next() {
    auto start = pos_;
    char c = peek();
    if (ident_start(c)) {
      while (!at_end() && ident_part(peek())) advance();
      auto t = make(TokenKind::Identifier, start);
      if (is_java_keyword(t.text)) t.kind = TokenKind::Keyword;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))))
      return number(start);
    if (c == '"') return quoted(start, '"', TokenKind::StringLiteral);
    if (c == '\'') return quoted(start, '\'', TokenKind::CharLiteral);

    for (auto op : kOperators) {
      if (src_.substr(pos_.offset, op.size()) == op) {
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        return make(TokenKind::Operator, start);
      }
    }
    if (kSingleExtra.find(c) != std::string_view::npos) {
      advance();
      return make(TokenKind::Operator, start);
    }
    fail(start, std::string("unexpected character '") + c + "'");
  }

  Token number(SourcePos start) {
    auto digits = [&](auto pred) {
      while (!at_end() && (pred(peek()) || peek() == '_')) advance();
    };
    auto dec = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
    bool floating = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance();
      advance();
      digits([](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)) != 0; });
    } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
      advance();
      advance();
      digits([](char ch) { return ch == '0' || ch == '1'; });
    } else {
      digits(dec);
      if (peek() == '.' && dec(peek(1))) {
        floating = true;
        advance();
        digits(dec);
      } else if (peek() == '.' && !ident_start(peek(1))) {
        floating = true;
        advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        floating = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
        if (!dec(peek())) fail(pos_, "malformed exponent");
        digits(dec);
      }
    }
    TokenKind kind = floating ? TokenKind::DoubleLiteral : TokenKind::IntLiteral;
    switch (peek()) {
      case 'l': case 'L': kind = TokenKind::LongLiteral; advance(); break;
      case 'f': case 'F': kind = TokenKind::FloatLiteral; advance(); break;
      case 'd': case 'D': kind = TokenKind::DoubleLiteral; advance(); break;
      default: break;
    }
    if (ident_part(peek())) fail(pos_, "malformed number literal");
    if (kind == TokenKind::LongLiteral && floating) fail(start, "malformed number literal");
    return make(kind, start);
  }

  Token quoted(SourcePos start, char quote, TokenKind kind) {
    advance();
    while (true) {
      if (at_end() || peek() == '\n')
        fail(start, kind == TokenKind::StringLiteral ? "unterminated string literal"
                                                     : "unterminated character literal");
      char c = peek();
      advance();
      if (c == '\\') {
        if (at_end()) fail(start, "unterminated literal");
        advance();
      } else if (c == quote) {
        break;
      }
    }
    auto t = make(kind, start);
    if (kind == TokenKind::CharLiteral && t.text.size() < 3) fail(start, "empty character literal");
    return t;
  }

  std::string_view src_;
  SourcePos pos_;
};

}  // namespace

bool is_java_keyword(std::string_view word) noexcept {
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

std::vector<Token> lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace fqnres::frontend
