#pragma once

#include <map>
#include <string>
#include <vector>

#include "fqnres/frontend/parser.hpp"
#include "fqnres/kb_entry.hpp"
#include "fqnres/source_span.hpp"

namespace fqnres::frontend {

/// A type as far as local inference could tell.
struct TypeRef {
  enum class State { Resolved, Hole };

  State state = State::Hole;
  std::string fqn;        // Resolved: dotted name or primitive keyword
  int hole_id = -1;       // Hole: unique per analysis run
  std::string hole_name;  // Hole: the simple type name it stands for, if any
  bool local = false;     // declared by the snippet itself

  static TypeRef resolved(std::string fqn, bool local = false);
  static TypeRef hole(int id, std::string name = {});

  bool is_hole() const { return state == State::Hole; }
  bool is_primitive() const;  // includes void

  friend bool operator==(const TypeRef&, const TypeRef&) = default;
};

/// Simple names that resolve to `java.lang.<Name>` without an import.
const std::vector<std::string>& java_lang_builtins();

/// One identifier occurrence that may need an FQN.
///
/// Type uses cover both type names and variables (a variable's FQN is its
/// type's). Method/Field uses carry the receiver type when there is one.
struct IdentifierUse {
  EntryKind kind = EntryKind::Type;
  SourceSpan span;
  std::string name;
  TypeRef type;  // Type: the referenced type
  bool has_owner = false;
  TypeRef owner;  // Method/Field
  std::vector<TypeRef> args;
  TypeRef result;  // Method return / Field type
};

struct Variable {
  std::string name;
  TypeRef type;
  SourceSpan declared_at;
};

/// Lexical scopes in creation order; scope 0 is the compilation unit.
struct SymbolTable {
  struct Scope {
    int parent = -1;
    std::map<std::string, Variable> variables;
  };
  std::vector<Scope> scopes;

  const Variable* find(int scope, const std::string& name) const;
};

struct Annotations {
  std::vector<TypeRef> expr_types;  // indexed by Expr::id
  std::vector<IdentifierUse> uses;  // ordered by source position
  int hole_count = 0;
};

struct Inference {
  SymbolTable symbols;
  Annotations annotations;
};

/// Single deterministic pass assigning TypeRefs. Throws AnalysisError for an
/// undeclared variable.
Inference infer(const Ast& ast);

}  // namespace fqnres::frontend
