#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fqnres/source_span.hpp"

namespace fqnres::frontend {

/// A type as written: primitive keyword, `void`, or a dotted name.
struct TypeName {
  std::vector<std::string> segments;
  SourceSpan span;

  std::string dotted() const;
  bool is_void() const { return segments.size() == 1 && segments[0] == "void"; }
  bool is_primitive() const;
};

bool is_primitive_name(std::string_view name) noexcept;

enum class LiteralKind { String, Char, Int, Long, Float, Double, Boolean, Null };

enum class ExprKind {
  Literal,
  Name,         // bare identifier
  FieldAccess,  // receiver.name
  Call,         // [receiver.]name(args)
  New,          // new Type(args)
  Unary,
  Binary,
  Assign,
  Conditional,
  InstanceOf,
  This,
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  ExprKind kind = ExprKind::Literal;
  int id = 0;  // dense per parse, indexes inference annotations
  SourceSpan span;
  std::string text;      // identifier, operator, or literal spelling
  SourceSpan name_span;  // Name / FieldAccess / Call: the identifier token
  LiteralKind literal = LiteralKind::Null;
  bool postfix = false;          // Unary
  ExprPtr receiver;              // FieldAccess, Call (null for unqualified calls)
  std::vector<ExprPtr> operands;  // arguments or operator operands
  std::optional<TypeName> type;  // New, InstanceOf
};

struct Declarator {
  std::string name;
  SourceSpan name_span;
  ExprPtr init;
};

enum class StmtKind {
  LocalVar,
  Expression,
  Return,
  If,
  While,
  DoWhile,
  For,
  ForEach,
  Block,
  Break,
  Continue,
  Empty,
  Throw,
  Try,
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct CatchClause {
  TypeName type;
  Declarator var;
  StmtPtr block;
};

struct Stmt {
  StmtKind kind = StmtKind::Empty;
  SourceSpan span;
  std::optional<TypeName> type;          // LocalVar, ForEach
  std::vector<Declarator> declarators;   // LocalVar; ForEach uses one, without init
  ExprPtr expr;                          // Expression, Return, Throw, If/While/DoWhile/For condition, ForEach iterable
  std::vector<StmtPtr> init;             // For
  std::vector<ExprPtr> updates;          // For
  std::vector<StmtPtr> children;         // Block statements; If {then, else}; loop body; Try block
  std::vector<CatchClause> catches;      // Try
  StmtPtr finally_block;                 // Try
};

struct Param {
  TypeName type;
  std::string name;
  SourceSpan name_span;
};

struct MethodDecl {
  std::optional<TypeName> return_type;  // empty for constructors
  std::string name;
  SourceSpan name_span;
  std::vector<Param> params;
  std::vector<TypeName> throws;
  StmtPtr body;  // null for abstract/interface methods
  bool synthetic = false;
};

struct FieldDecl {
  TypeName type;
  std::vector<Declarator> declarators;
};

struct ClassDecl {
  std::string name;
  SourceSpan name_span;
  bool is_interface = false;
  bool synthetic = false;
  std::vector<TypeName> supertypes;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
};

struct ImportDecl {
  std::vector<std::string> segments;
  bool on_demand = false;
  bool is_static = false;
  SourceSpan span;

  std::string dotted() const;
};

struct CompilationUnit {
  std::vector<std::string> package_name;
  std::vector<ImportDecl> imports;
  std::vector<ClassDecl> classes;
};

}  // namespace fqnres::frontend
