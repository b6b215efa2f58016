// Recursive-descent parser for the Java subset the resolver understands.
//
// Unsupported constructs (generics, arrays, lambdas, annotations, casts, ...)
// are reported as syntax errors naming the construct instead of failing at
// some later token.

#include "fqnres/frontend/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

#include "fqnres/error.hpp"
#include "fqnres/frontend/lexer.hpp"

namespace fqnres::frontend {

std::string TypeName::dotted() const {
  std::string s;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) s += '.';
    s += segments[i];
  }
  return s;
}

bool is_primitive_name(std::string_view name) noexcept {
  static constexpr std::array<std::string_view, 8> kPrimitives = {
      "boolean", "byte", "char", "short", "int", "long", "float", "double"};
  return std::find(kPrimitives.begin(), kPrimitives.end(), name) != kPrimitives.end();
}

bool TypeName::is_primitive() const { return segments.size() == 1 && is_primitive_name(segments[0]); }

std::string ImportDecl::dotted() const {
  std::string s;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) s += '.';
    s += segments[i];
  }
  return s;
}

namespace {

enum class Mode { TypeDecls, Members, Statements };

bool is_modifier(const Token& t) {
  static constexpr std::array<std::string_view, 11> kModifiers = {
      "public", "private", "protected", "static",    "final",  "abstract",
      "native", "strictfp", "transient", "volatile", "synchronized"};
  return t.kind == TokenKind::Keyword &&
         std::find(kModifiers.begin(), kModifiers.end(), t.text) != kModifiers.end();
}

bool is_assign_op(const Token& t) {
  static constexpr std::array<std::string_view, 12> kOps = {
      "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};
  return t.kind == TokenKind::Operator && std::find(kOps.begin(), kOps.end(), t.text) != kOps.end();
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::Identifier: return "identifier '" + t.text + "'";
    case TokenKind::StringLiteral:
    case TokenKind::CharLiteral:
    case TokenKind::IntLiteral:
    case TokenKind::LongLiteral:
    case TokenKind::FloatLiteral:
    case TokenKind::DoubleLiteral: return "literal " + t.text;
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  CompilationUnit parse(Mode mode) {
    CompilationUnit unit;
    parse_header(unit);
    switch (mode) {
      case Mode::TypeDecls:
        while (!at_end()) unit.classes.push_back(parse_class());
        break;
      case Mode::Members: {
        ClassDecl cls = synthetic_class();
        while (!at_end()) parse_member(cls);
        unit.classes.push_back(std::move(cls));
        break;
      }
      case Mode::Statements: {
        ClassDecl cls = synthetic_class();
        MethodDecl run;
        run.name = std::string(kSnippetMethod);
        run.synthetic = true;
        TypeName v;
        v.segments = {"void"};
        run.return_type = v;
        auto body = std::make_unique<Stmt>();
        body->kind = StmtKind::Block;
        body->span = peek().span;
        while (!at_end()) body->children.push_back(parse_statement());
        if (!body->children.empty())
          body->span = SourceSpan::cover(body->children.front()->span, body->children.back()->span);
        run.body = std::move(body);
        cls.methods.push_back(std::move(run));
        unit.classes.push_back(std::move(cls));
        break;
      }
    }
    return unit;
  }

  /// Index of the first token after package/import declarations.
  std::size_t header_end() const { return header_end_; }
  int expr_count() const { return next_id_; }

 private:
  // Token access ---------------------------------------------------------------
  const Token& peek(std::size_t ahead = 0) const {
    auto i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    last_ = t.span;
    return t;
  }
  bool accept_op(std::string_view op) {
    if (!peek().is_op(op)) return false;
    advance();
    return true;
  }
  bool accept_keyword(std::string_view kw) {
    if (!peek().is_keyword(kw)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const Token& at, const std::string& reason,
                         std::vector<std::string> expected = {}) {
    throw SyntaxError(at.span.first, reason, std::move(expected));
  }
  [[noreturn]] void unexpected(std::vector<std::string> expected) {
    fail(peek(), "unexpected " + describe(peek()), std::move(expected));
  }

  const Token& expect_op(std::string_view op) {
    if (!peek().is_op(op)) unexpected({"'" + std::string(op) + "'"});
    return advance();
  }
  const Token& expect_identifier() {
    if (peek().kind != TokenKind::Identifier) unexpected({"identifier"});
    return advance();
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNesting) p_.fail(p_.peek(), "nesting too deep");
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  // Unsupported-construct diagnostics shared by several call sites.
  void reject_type_suffix() {
    if (peek().is_op("<")) fail(peek(), "generic type arguments are not supported");
    if (peek().is_op("[")) fail(peek(), "arrays are not supported");
    if (peek().is_op("...")) fail(peek(), "varargs are not supported");
  }

  // Declarations ---------------------------------------------------------------
  void parse_header(CompilationUnit& unit) {
    if (accept_keyword("package")) {
      unit.package_name = parse_dotted(false).first;
      expect_op(";");
    }
    while (peek().is_keyword("import")) {
      ImportDecl imp;
      auto start = advance().span;
      imp.is_static = accept_keyword("static");
      auto [segs, star] = parse_dotted(true);
      imp.segments = std::move(segs);
      imp.on_demand = star;
      expect_op(";");
      imp.span = {start.first, last_.last};
      unit.imports.push_back(std::move(imp));
    }
    header_end_ = pos_;
  }

  std::pair<std::vector<std::string>, bool> parse_dotted(bool allow_star) {
    std::vector<std::string> segs{expect_identifier().text};
    while (accept_op(".")) {
      if (allow_star && accept_op("*")) return {segs, true};
      segs.push_back(expect_identifier().text);
    }
    return {segs, false};
  }

  ClassDecl synthetic_class() {
    ClassDecl cls;
    cls.name = std::string(kSnippetClass);
    cls.synthetic = true;
    return cls;
  }

  void skip_modifiers() {
    while (true) {
      if (peek().is_op("@")) fail(peek(), "annotations are not supported");
      if (!is_modifier(peek())) return;
      advance();
    }
  }

  ClassDecl parse_class() {
    skip_modifiers();
    ClassDecl cls;
    if (accept_keyword("interface")) {
      cls.is_interface = true;
    } else if (!accept_keyword("class")) {
      if (peek().is_keyword("enum")) fail(peek(), "enums are not supported");
      unexpected({"'class'", "'interface'"});
    }
    const auto& name = expect_identifier();
    cls.name = name.text;
    cls.name_span = name.span;
    if (peek().is_op("<")) fail(peek(), "generic type parameters are not supported");
    if (accept_keyword("extends")) {
      cls.supertypes.push_back(parse_type(false));
      while (cls.is_interface && accept_op(",")) cls.supertypes.push_back(parse_type(false));
    }
    if (accept_keyword("implements")) {
      cls.supertypes.push_back(parse_type(false));
      while (accept_op(",")) cls.supertypes.push_back(parse_type(false));
    }
    expect_op("{");
    while (!peek().is_op("}")) {
      if (at_end()) unexpected({"'}'"});
      parse_member(cls);
    }
    expect_op("}");
    return cls;
  }

  void parse_member(ClassDecl& cls) {
    DepthGuard guard(*this);
    if (accept_op(";")) return;
    skip_modifiers();
    const Token& t = peek();
    if (t.is_keyword("class") || t.is_keyword("interface") || t.is_keyword("enum"))
      fail(t, "nested type declarations are not supported");
    if (t.is_op("{")) fail(t, "initializer blocks are not supported");
    if (t.is_op("<")) fail(t, "generic methods are not supported");

    // Constructor: Name '('
    if (t.kind == TokenKind::Identifier && t.text == cls.name && peek(1).is_op("(")) {
      MethodDecl ctor;
      ctor.name = advance().text;
      ctor.name_span = last_;
      parse_method_rest(ctor);
      cls.methods.push_back(std::move(ctor));
      return;
    }

    TypeName type = parse_type(true);
    const auto& name = peek();
    if (name.kind != TokenKind::Identifier) unexpected({"identifier"});
    if (peek(1).is_op("(")) {
      MethodDecl m;
      m.return_type = std::move(type);
      m.name = advance().text;
      m.name_span = last_;
      parse_method_rest(m);
      cls.methods.push_back(std::move(m));
      return;
    }
    if (type.is_void()) fail(type_start_, "field cannot have type void");
    FieldDecl f;
    f.type = std::move(type);
    f.declarators = parse_declarators();
    expect_op(";");
    cls.fields.push_back(std::move(f));
  }

  void parse_method_rest(MethodDecl& m) {
    expect_op("(");
    if (!peek().is_op(")")) {
      do {
        accept_keyword("final");
        if (peek().is_op("@")) fail(peek(), "annotations are not supported");
        Param p;
        p.type = parse_type(false);
        const auto& n = expect_identifier();
        p.name = n.text;
        p.name_span = n.span;
        reject_type_suffix();
        m.params.push_back(std::move(p));
      } while (accept_op(","));
    }
    expect_op(")");
    if (peek().is_op("[")) fail(peek(), "arrays are not supported");
    if (accept_keyword("throws")) {
      m.throws.push_back(parse_type(false));
      while (accept_op(",")) m.throws.push_back(parse_type(false));
    }
    if (accept_op(";")) return;
    if (!peek().is_op("{")) unexpected({"'{'", "';'"});
    m.body = parse_block();
  }

  /// `void` only where `allow_void`; primitives or dotted names otherwise.
  TypeName parse_type(bool allow_void) {
    TypeName type;
    const Token& t = peek();
    type_start_ = t;
    if (t.kind == TokenKind::Keyword && (is_primitive_name(t.text) || (allow_void && t.text == "void"))) {
      type.segments = {advance().text};
      type.span = last_;
    } else if (t.kind == TokenKind::Identifier) {
      auto start = t.span;
      type.segments.push_back(advance().text);
      while (peek().is_op(".") && peek(1).kind == TokenKind::Identifier) {
        advance();
        type.segments.push_back(advance().text);
      }
      type.span = {start.first, last_.last};
    } else {
      unexpected({"type"});
    }
    reject_type_suffix();
    return type;
  }

  std::vector<Declarator> parse_declarators() {
    std::vector<Declarator> decls;
    do {
      Declarator d;
      const auto& n = expect_identifier();
      d.name = n.text;
      d.name_span = n.span;
      if (peek().is_op("[")) fail(peek(), "arrays are not supported");
      if (accept_op("=")) {
        if (peek().is_op("{")) fail(peek(), "array initializers are not supported");
        d.init = parse_expression();
      }
      decls.push_back(std::move(d));
    } while (accept_op(","));
    return decls;
  }

  // Statements -----------------------------------------------------------------
  StmtPtr make_stmt(StmtKind kind, const SourceSpan& start) {
    auto s = std::make_unique<Stmt>();
    s->kind = kind;
    s->span = start;
    return s;
  }
  void finish(Stmt& s) { s.span.last = last_.last; }

  StmtPtr parse_block() {
    DepthGuard guard(*this);
    auto s = make_stmt(StmtKind::Block, peek().span);
    expect_op("{");
    while (!peek().is_op("}")) {
      if (at_end()) unexpected({"'}'"});
      s->children.push_back(parse_statement());
    }
    expect_op("}");
    finish(*s);
    return s;
  }

  /// Lookahead: does a local variable declaration start here?
  bool starts_local_var() const {
    const Token& t = peek();
    if (t.is_keyword("final")) return true;
    if (t.kind == TokenKind::Keyword && is_primitive_name(t.text)) return true;
    if (t.kind != TokenKind::Identifier) return false;
    std::size_t i = 1;
    while (peek(i).is_op(".") && peek(i + 1).kind == TokenKind::Identifier) i += 2;
    const Token& after = peek(i);
    return after.kind == TokenKind::Identifier || after.is_op("<") ||
           (after.is_op("[") && peek(i + 1).is_op("]"));
  }

  StmtPtr parse_statement() {
    DepthGuard guard(*this);
    const Token& t = peek();
    auto start = t.span;

    if (t.is_op("{")) return parse_block();
    if (t.is_op(";")) {
      advance();
      auto s = make_stmt(StmtKind::Empty, start);
      finish(*s);
      return s;
    }
    if (t.is_op("@")) fail(t, "annotations are not supported");
    if (t.kind == TokenKind::Keyword) {
      if (t.text == "if") return parse_if();
      if (t.text == "while") {
        advance();
        auto s = make_stmt(StmtKind::While, start);
        s->expr = parse_paren_condition();
        s->children.push_back(parse_statement());
        finish(*s);
        return s;
      }
      if (t.text == "do") {
        advance();
        auto s = make_stmt(StmtKind::DoWhile, start);
        s->children.push_back(parse_statement());
        if (!accept_keyword("while")) unexpected({"'while'"});
        s->expr = parse_paren_condition();
        expect_op(";");
        finish(*s);
        return s;
      }
      if (t.text == "for") return parse_for();
      if (t.text == "return" || t.text == "throw") {
        advance();
        auto s = make_stmt(t.text == "return" ? StmtKind::Return : StmtKind::Throw, start);
        if (s->kind == StmtKind::Throw || !peek().is_op(";")) s->expr = parse_expression();
        expect_op(";");
        finish(*s);
        return s;
      }
      if (t.text == "break" || t.text == "continue") {
        advance();
        auto s = make_stmt(t.text == "break" ? StmtKind::Break : StmtKind::Continue, start);
        expect_op(";");
        finish(*s);
        return s;
      }
      if (t.text == "try") return parse_try();
      if (t.text == "switch") fail(t, "switch statements are not supported");
      if (t.text == "synchronized") fail(t, "synchronized blocks are not supported");
      if (t.text == "class" || t.text == "interface" || t.text == "enum")
        fail(t, "local type declarations are not supported");
      if (t.text == "assert") fail(t, "assert statements are not supported");
    }

    if (starts_local_var()) {
      auto s = make_stmt(StmtKind::LocalVar, start);
      accept_keyword("final");
      if (peek().is_op("@")) fail(peek(), "annotations are not supported");
      s->type = parse_type(false);
      s->declarators = parse_declarators();
      expect_op(";");
      finish(*s);
      return s;
    }

    auto s = make_stmt(StmtKind::Expression, start);
    s->expr = parse_expression();
    require_statement_expression(*s->expr);
    expect_op(";");
    finish(*s);
    return s;
  }

  void require_statement_expression(const Expr& e) {
    bool ok = e.kind == ExprKind::Assign || e.kind == ExprKind::Call || e.kind == ExprKind::New ||
              (e.kind == ExprKind::Unary && (e.text == "++" || e.text == "--"));
    if (!ok) throw SyntaxError(e.span.first, "not a statement", {});
  }

  ExprPtr parse_paren_condition() {
    expect_op("(");
    auto e = parse_expression();
    expect_op(")");
    return e;
  }

  StmtPtr parse_if() {
    auto s = make_stmt(StmtKind::If, advance().span);
    s->expr = parse_paren_condition();
    s->children.push_back(parse_statement());
    if (accept_keyword("else")) s->children.push_back(parse_statement());
    finish(*s);
    return s;
  }

  StmtPtr parse_for() {
    auto start = advance().span;
    expect_op("(");
    // Enhanced for: [final] Type name ':'
    if (starts_local_var()) {
      auto save = pos_;
      accept_keyword("final");
      auto type = parse_type(false);
      if (peek().kind == TokenKind::Identifier && peek(1).is_op(":")) {
        auto s = make_stmt(StmtKind::ForEach, start);
        s->type = std::move(type);
        Declarator d;
        d.name = advance().text;
        d.name_span = last_;
        s->declarators.push_back(std::move(d));
        expect_op(":");
        s->expr = parse_expression();
        expect_op(")");
        s->children.push_back(parse_statement());
        finish(*s);
        return s;
      }
      pos_ = save;
    }

    auto s = make_stmt(StmtKind::For, start);
    if (!peek().is_op(";")) {
      if (starts_local_var()) {
        auto init = make_stmt(StmtKind::LocalVar, peek().span);
        accept_keyword("final");
        init->type = parse_type(false);
        init->declarators = parse_declarators();
        finish(*init);
        s->init.push_back(std::move(init));
      } else {
        do {
          auto init = make_stmt(StmtKind::Expression, peek().span);
          init->expr = parse_expression();
          require_statement_expression(*init->expr);
          finish(*init);
          s->init.push_back(std::move(init));
        } while (accept_op(","));
      }
    }
    expect_op(";");
    if (!peek().is_op(";")) s->expr = parse_expression();
    expect_op(";");
    if (!peek().is_op(")")) {
      do {
        auto u = parse_expression();
        require_statement_expression(*u);
        s->updates.push_back(std::move(u));
      } while (accept_op(","));
    }
    expect_op(")");
    s->children.push_back(parse_statement());
    finish(*s);
    return s;
  }

  StmtPtr parse_try() {
    auto s = make_stmt(StmtKind::Try, advance().span);
    if (peek().is_op("(")) fail(peek(), "try-with-resources is not supported");
    if (!peek().is_op("{")) unexpected({"'{'"});
    s->children.push_back(parse_block());
    while (accept_keyword("catch")) {
      CatchClause c;
      expect_op("(");
      accept_keyword("final");
      c.type = parse_type(false);
      if (peek().is_op("|")) fail(peek(), "multi-catch is not supported");
      const auto& n = expect_identifier();
      c.var.name = n.text;
      c.var.name_span = n.span;
      expect_op(")");
      if (!peek().is_op("{")) unexpected({"'{'"});
      c.block = parse_block();
      s->catches.push_back(std::move(c));
    }
    if (accept_keyword("finally")) {
      if (!peek().is_op("{")) unexpected({"'{'"});
      s->finally_block = parse_block();
    }
    if (s->catches.empty() && !s->finally_block) unexpected({"'catch'", "'finally'"});
    finish(*s);
    return s;
  }

  // Expressions ----------------------------------------------------------------
  ExprPtr make_expr(ExprKind kind, const SourceSpan& span) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->id = next_id_++;
    e->span = span;
    return e;
  }

  ExprPtr parse_expression() {
    DepthGuard guard(*this);
    auto lhs = parse_conditional();
    if (is_assign_op(peek())) {
      if (lhs->kind != ExprKind::Name && lhs->kind != ExprKind::FieldAccess)
        throw SyntaxError(lhs->span.first, "invalid assignment target", {});
      auto op = advance().text;
      auto rhs = parse_expression();
      auto e = make_expr(ExprKind::Assign, SourceSpan::cover(lhs->span, rhs->span));
      e->text = op;
      e->operands.push_back(std::move(lhs));
      e->operands.push_back(std::move(rhs));
      return e;
    }
    if (peek().is_op("->")) fail(peek(), "lambda expressions are not supported");
    return lhs;
  }

  ExprPtr parse_conditional() {
    auto cond = parse_binary(0);
    if (!accept_op("?")) return cond;
    auto a = parse_expression();
    expect_op(":");
    DepthGuard guard(*this);
    auto b = parse_conditional();
    auto e = make_expr(ExprKind::Conditional, SourceSpan::cover(cond->span, b->span));
    e->operands.push_back(std::move(cond));
    e->operands.push_back(std::move(a));
    e->operands.push_back(std::move(b));
    return e;
  }

  static int precedence(const Token& t) {
    if (t.kind == TokenKind::Keyword) return t.text == "instanceof" ? 7 : -1;
    if (t.kind != TokenKind::Operator) return -1;
    const auto& s = t.text;
    if (s == "||") return 1;
    if (s == "&&") return 2;
    if (s == "|") return 3;
    if (s == "^") return 4;
    if (s == "&") return 5;
    if (s == "==" || s == "!=") return 6;
    if (s == "<" || s == ">" || s == "<=" || s == ">=") return 7;
    if (s == "<<" || s == ">>" || s == ">>>") return 8;
    if (s == "+" || s == "-") return 9;
    if (s == "*" || s == "/" || s == "%") return 10;
    return -1;
  }

  // Precedence climbing; all binary operators are left-associative.
  ExprPtr parse_binary(int min_prec) {
    auto lhs = parse_unary();
    while (true) {
      int prec = precedence(peek());
      if (prec < 0 || prec < min_prec) return lhs;
      DepthGuard guard(*this);
      if (peek().is_keyword("instanceof")) {
        advance();
        auto type = parse_type(false);
        auto e = make_expr(ExprKind::InstanceOf, {lhs->span.first, type.span.last});
        e->type = std::move(type);
        e->operands.push_back(std::move(lhs));
        lhs = std::move(e);
        continue;
      }
      auto op = advance().text;
      auto rhs = parse_binary(prec + 1);
      auto e = make_expr(ExprKind::Binary, SourceSpan::cover(lhs->span, rhs->span));
      e->text = op;
      e->operands.push_back(std::move(lhs));
      e->operands.push_back(std::move(rhs));
      lhs = std::move(e);
    }
  }

  ExprPtr parse_unary() {
    DepthGuard guard(*this);
    const Token& t = peek();
    if (t.kind == TokenKind::Operator &&
        (t.text == "+" || t.text == "-" || t.text == "!" || t.text == "~" || t.text == "++" ||
         t.text == "--")) {
      auto start = advance().span;
      auto op = t.text;
      auto operand = parse_unary();
      auto e = make_expr(ExprKind::Unary, {start.first, operand->span.last});
      e->text = op;
      e->operands.push_back(std::move(operand));
      return e;
    }
    return parse_postfix(parse_primary());
  }

  ExprPtr parse_postfix(ExprPtr e) {
    while (true) {
      if (accept_op(".")) {
        if (peek().is_op("<")) fail(peek(), "explicit type arguments are not supported");
        if (peek().is_keyword("new")) fail(peek(), "inner class creation is not supported");
        if (peek().is_keyword("class")) fail(peek(), "class literals are not supported");
        const auto& name = expect_identifier();
        if (peek().is_op("(")) {
          auto call = make_expr(ExprKind::Call, e->span);
          call->text = name.text;
          call->name_span = name.span;
          call->receiver = std::move(e);
          call->operands = parse_arguments();
          call->span.last = last_.last;
          e = std::move(call);
        } else {
          auto fa = make_expr(ExprKind::FieldAccess, {e->span.first, name.span.last});
          fa->text = name.text;
          fa->name_span = name.span;
          fa->receiver = std::move(e);
          e = std::move(fa);
        }
      } else if (peek().is_op("++") || peek().is_op("--")) {
        auto op = advance().text;
        auto u = make_expr(ExprKind::Unary, {e->span.first, last_.last});
        u->text = op;
        u->postfix = true;
        u->operands.push_back(std::move(e));
        e = std::move(u);
      } else if (peek().is_op("[")) {
        fail(peek(), "arrays are not supported");
      } else if (peek().is_op("::")) {
        fail(peek(), "method references are not supported");
      } else {
        return e;
      }
    }
  }

  std::vector<ExprPtr> parse_arguments() {
    expect_op("(");
    std::vector<ExprPtr> args;
    if (!peek().is_op(")")) {
      do {
        args.push_back(parse_expression());
      } while (accept_op(","));
    }
    expect_op(")");
    return args;
  }

  ExprPtr literal(LiteralKind kind) {
    const auto& t = advance();
    auto e = make_expr(ExprKind::Literal, t.span);
    e->literal = kind;
    e->text = t.text;
    return e;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::StringLiteral: return literal(LiteralKind::String);
      case TokenKind::CharLiteral: return literal(LiteralKind::Char);
      case TokenKind::IntLiteral: return literal(LiteralKind::Int);
      case TokenKind::LongLiteral: return literal(LiteralKind::Long);
      case TokenKind::FloatLiteral: return literal(LiteralKind::Float);
      case TokenKind::DoubleLiteral: return literal(LiteralKind::Double);
      case TokenKind::Identifier: {
        const auto& name = advance();
        if (peek().is_op("->")) fail(peek(), "lambda expressions are not supported");
        if (peek().is_op("(")) {
          auto call = make_expr(ExprKind::Call, name.span);
          call->text = name.text;
          call->name_span = name.span;
          call->operands = parse_arguments();
          call->span.last = last_.last;
          return call;
        }
        auto e = make_expr(ExprKind::Name, name.span);
        e->text = name.text;
        e->name_span = name.span;
        return e;
      }
      case TokenKind::Keyword:
        if (t.text == "true" || t.text == "false") return literal(LiteralKind::Boolean);
        if (t.text == "null") return literal(LiteralKind::Null);
        if (t.text == "this") {
          if (peek(1).is_op("(")) fail(t, "explicit constructor calls are not supported");
          auto e = make_expr(ExprKind::This, advance().span);
          e->text = "this";
          return e;
        }
        if (t.text == "new") return parse_new();
        if (t.text == "super") fail(t, "super references are not supported");
        if (is_primitive_name(t.text) || t.text == "void")
          fail(t, "unexpected type name '" + t.text + "' in expression");
        break;
      case TokenKind::Operator:
        if (t.text == "(") {
          auto start = advance().span;
          if (peek().kind == TokenKind::Keyword && is_primitive_name(peek().text))
            fail(peek(), "casts are not supported");
          if (peek().is_op(")")) fail(peek(), "lambda expressions are not supported");
          auto inner = parse_expression();
          expect_op(")");
          if (peek().kind == TokenKind::Identifier || peek().kind == TokenKind::StringLiteral ||
              peek().is_op("("))
            fail(peek(), "casts are not supported");
          if (peek().is_op("->")) fail(peek(), "lambda expressions are not supported");
          inner->span = {start.first, last_.last};
          return inner;
        }
        if (t.text == "<") fail(t, "generic type arguments are not supported");
        if (t.text == "@") fail(t, "annotations are not supported");
        break;
      default: break;
    }
    unexpected({"expression"});
  }

  ExprPtr parse_new() {
    auto start = advance().span;
    auto type = parse_type(false);
    if (type.is_primitive()) fail(peek(), "arrays are not supported");
    auto e = make_expr(ExprKind::New, start);
    e->type = std::move(type);
    if (!peek().is_op("(")) unexpected({"'('"});
    e->operands = parse_arguments();
    if (peek().is_op("{")) fail(peek(), "anonymous classes are not supported");
    e->span.last = last_.last;
    return e;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::size_t header_end_ = 0;
  SourceSpan last_{};
  Token type_start_{};
  int depth_ = 0;
  int next_id_ = 0;
};

struct Attempt {
  std::optional<CompilationUnit> unit;
  std::optional<SyntaxError> error;
  std::size_t header_end = 0;
  int expr_count = 0;
};

Attempt attempt(const std::vector<Token>& tokens, Mode mode) {
  Parser p(tokens);
  Attempt a;
  try {
    a.unit = p.parse(mode);
  } catch (const SyntaxError& e) {
    a.error = e;
  }
  a.header_end = p.header_end();
  a.expr_count = p.expr_count();
  return a;
}

Mode mode_for(WrapLevel level) {
  switch (level) {
    case WrapLevel::None: return Mode::TypeDecls;
    case WrapLevel::ClassBody: return Mode::Members;
    case WrapLevel::MethodBody: return Mode::Statements;
  }
  return Mode::TypeDecls;
}

}  // namespace

Snippet wrap(std::string_view source, bool allow_wrapping) {
  auto tokens = lex(source);
  if (tokens.size() == 1) throw Error("empty snippet");  // only the End token
  Snippet s;
  s.source = std::string(source);

  // Statements before members: `T x = e;` is both, and a snippet is code
  // meant to run.
  const std::array<WrapLevel, 3> levels = {WrapLevel::None, WrapLevel::MethodBody,
                                           WrapLevel::ClassBody};
  std::optional<SyntaxError> furthest;
  for (auto level : levels) {
    if (level != WrapLevel::None && !allow_wrapping) break;
    auto a = attempt(tokens, mode_for(level));
    if (a.unit) {
      s.level = level;
      s.origin = level == WrapLevel::None ? Origin::Freestanding : Origin::Wrapped;
      if (level == WrapLevel::None) {
        s.wrapped_source = s.source;
        return s;
      }
      // The wrapper opens right after the package/import header.
      std::size_t at =
          a.header_end > 0 ? tokens[a.header_end - 1].span.last.offset + 1 : std::size_t{0};
      s.body_offset = at;
      std::string open = "class " + std::string(kSnippetClass) + " {";
      if (level == WrapLevel::MethodBody) open += " void " + std::string(kSnippetMethod) + "() {";
      std::string close = level == WrapLevel::MethodBody ? "} }" : "}";
      s.wrapped_source = s.source.substr(0, at) + open + "\n" + s.source.substr(at) + "\n" + close + "\n";
      return s;
    }
    // Furthest error wins; on a tie a named "not supported" error beats a
    // generic expected-token one.
    if (!furthest || a.error->pos().offset > furthest->pos().offset ||
        (a.error->pos().offset == furthest->pos().offset && !furthest->expected().empty() &&
         a.error->expected().empty()))
      furthest = a.error;
  }
  throw *furthest;
}

Ast parse(const Snippet& snippet) {
  auto tokens = lex(snippet.source);
  auto a = attempt(tokens, mode_for(snippet.level));
  if (!a.unit) throw *a.error;
  Ast ast;
  ast.unit = std::move(*a.unit);
  ast.origin = snippet.origin;
  ast.level = snippet.level;
  ast.expr_count = a.expr_count;
  return ast;
}

}  // namespace fqnres::frontend
