#include "fqnres/frontend/infer.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "fqnres/error.hpp"

namespace fqnres::frontend {

TypeRef TypeRef::resolved(std::string fqn, bool local) {
  TypeRef t;
  t.state = State::Resolved;
  t.fqn = std::move(fqn);
  t.local = local;
  return t;
}

TypeRef TypeRef::hole(int id, std::string name) {
  TypeRef t;
  t.state = State::Hole;
  t.hole_id = id;
  t.hole_name = std::move(name);
  return t;
}

bool TypeRef::is_primitive() const {
  return state == State::Resolved && (fqn == "void" || is_primitive_name(fqn));
}

const std::vector<std::string>& java_lang_builtins() {
  static const std::vector<std::string> kBuiltins = {"String", "Object",    "Integer", "Boolean",
                                                     "Character", "Double", "Long"};
  return kBuiltins;
}

const Variable* SymbolTable::find(int scope, const std::string& name) const {
  for (int s = scope; s >= 0; s = scopes[s].parent) {
    auto it = scopes[s].variables.find(name);
    if (it != scopes[s].variables.end()) return &it->second;
  }
  return nullptr;
}

namespace {

bool capitalized(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name.front()));
}

int numeric_rank(const std::string& prim) {
  if (prim == "double") return 4;
  if (prim == "float") return 3;
  if (prim == "long") return 2;
  if (prim == "int" || prim == "short" || prim == "byte" || prim == "char") return 1;
  return 0;
}

std::string promote(const std::string& a, const std::string& b) {
  static const char* kByRank[] = {"", "int", "long", "float", "double"};
  return kByRank[std::max(numeric_rank(a), numeric_rank(b))];
}

struct LocalClass {
  std::string fqn;
  std::map<std::string, TypeRef> fields;
  std::set<std::pair<std::string, std::size_t>> methods;
};

class Inferrer {
 public:
  explicit Inferrer(const Ast& ast) : ast_(ast) {
    out_.annotations.expr_types.resize(static_cast<std::size_t>(ast.expr_count));
  }

  Inference run() {
    const auto& unit = ast_.unit;
    std::string pkg;
    for (const auto& s : unit.package_name) pkg += s + ".";

    for (const auto& imp : unit.imports)
      if (!imp.on_demand && !imp.is_static) imports_[imp.segments.back()] = imp.dotted();
    for (const auto& cls : unit.classes) classes_[cls.name].fqn = pkg + cls.name;

    push_scope();  // compilation unit
    for (const auto& cls : unit.classes) visit_class(cls);
    pop_scope();

    auto& uses = out_.annotations.uses;
    std::stable_sort(uses.begin(), uses.end(), [](const IdentifierUse& a, const IdentifierUse& b) {
      return a.span.begin() < b.span.begin();
    });
    out_.annotations.hole_count = next_hole_;
    return std::move(out_);
  }

 private:
  // Scopes -------------------------------------------------------------------
  void push_scope() {
    SymbolTable::Scope s;
    s.parent = current_scope_;
    out_.symbols.scopes.push_back(std::move(s));
    current_scope_ = static_cast<int>(out_.symbols.scopes.size()) - 1;
  }
  void pop_scope() { current_scope_ = out_.symbols.scopes[current_scope_].parent; }

  void declare(const std::string& name, const SourceSpan& span, const TypeRef& type) {
    out_.symbols.scopes[current_scope_].variables[name] = Variable{name, type, span};
    record_variable(span, name, type);
  }

  // Holes ----------------------------------------------------------------------
  TypeRef fresh_hole() { return TypeRef::hole(next_hole_++); }

  TypeRef named_hole(const std::string& name) {
    auto it = named_holes_.find(name);
    if (it != named_holes_.end()) return it->second;
    auto h = TypeRef::hole(next_hole_++, name);
    named_holes_.emplace(name, h);
    return h;
  }

  // Uses -----------------------------------------------------------------------
  void record_type(const SourceSpan& span, const std::string& name, const TypeRef& type) {
    IdentifierUse u;
    u.kind = EntryKind::Type;
    u.span = span;
    u.name = name;
    u.type = type;
    out_.annotations.uses.push_back(std::move(u));
  }
  void record_variable(const SourceSpan& span, const std::string& name, const TypeRef& type) {
    record_type(span, name, type);
  }

  // Type names -----------------------------------------------------------------
  std::optional<TypeRef> resolve_simple(const std::string& name) const {
    if (is_primitive_name(name) || name == "void") return TypeRef::resolved(name);
    if (auto it = classes_.find(name); it != classes_.end())
      return TypeRef::resolved(it->second.fqn, true);
    if (auto it = imports_.find(name); it != imports_.end()) return TypeRef::resolved(it->second);
    const auto& builtins = java_lang_builtins();
    if (std::find(builtins.begin(), builtins.end(), name) != builtins.end())
      return TypeRef::resolved("java.lang." + name);
    return std::nullopt;
  }

  bool names_type(const std::string& name) const {
    return capitalized(name) || resolve_simple(name).has_value();
  }

  TypeRef resolve_segments(const std::vector<std::string>& segs) {
    if (segs.size() == 1) {
      if (auto t = resolve_simple(segs[0])) return *t;
      return named_hole(segs[0]);
    }
    // `Outer.Inner` starts with a type; `pkg.Type` is fully qualified.
    if (names_type(segs[0])) {
      auto head = resolve_simple(segs[0]);
      if (!head) return named_hole(segs.back());
      std::string fqn = head->fqn;
      for (std::size_t i = 1; i < segs.size(); ++i) fqn += "." + segs[i];
      return TypeRef::resolved(fqn, head->local);
    }
    std::string fqn;
    for (std::size_t i = 0; i < segs.size(); ++i) fqn += (i ? "." : "") + segs[i];
    return TypeRef::resolved(fqn);
  }

  TypeRef visit_type(const TypeName& type) {
    auto t = resolve_segments(type.segments);
    record_type(type.span, type.dotted(), t);
    return t;
  }

  // Declarations ---------------------------------------------------------------
  void visit_class(const ClassDecl& cls) {
    auto& info = classes_[cls.name];
    current_class_ = &info;
    for (const auto& s : cls.supertypes) visit_type(s);

    push_scope();
    // Member signatures first so bodies can reference any field or method.
    for (const auto& f : cls.fields) {
      auto t = visit_type(f.type);
      for (const auto& d : f.declarators) {
        info.fields[d.name] = t;
        declare(d.name, d.name_span, t);
      }
    }
    for (const auto& m : cls.methods) info.methods.insert({m.name, m.params.size()});

    for (const auto& f : cls.fields)
      for (const auto& d : f.declarators)
        if (d.init) visit_expr(*d.init);
    for (const auto& m : cls.methods) visit_method(m);
    pop_scope();
    current_class_ = nullptr;
  }

  void visit_method(const MethodDecl& m) {
    if (m.return_type && !m.synthetic) visit_type(*m.return_type);
    push_scope();
    for (const auto& p : m.params) declare(p.name, p.name_span, visit_type(p.type));
    for (const auto& t : m.throws) visit_type(t);
    if (m.body) visit_stmt(*m.body);
    pop_scope();
  }

  // Statements -----------------------------------------------------------------
  void visit_local(const Stmt& s) {
    bool inferred = s.type->segments.size() == 1 && s.type->segments[0] == "var" &&
                    resolve_simple("var") == std::nullopt;
    TypeRef declared;
    if (!inferred) declared = visit_type(*s.type);
    for (const auto& d : s.declarators) {
      TypeRef t = declared;
      if (d.init) {
        auto init = visit_expr(*d.init);
        if (inferred) t = init;
      } else if (inferred) {
        t = fresh_hole();
      }
      declare(d.name, d.name_span, t);
    }
  }

  void visit_stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::LocalVar: visit_local(s); break;
      case StmtKind::Expression:
      case StmtKind::Throw: visit_expr(*s.expr); break;
      case StmtKind::Return:
        if (s.expr) visit_expr(*s.expr);
        break;
      case StmtKind::If:
      case StmtKind::While:
        visit_expr(*s.expr);
        for (const auto& c : s.children) scoped(*c);
        break;
      case StmtKind::DoWhile:
        scoped(*s.children.front());
        visit_expr(*s.expr);
        break;
      case StmtKind::For:
        push_scope();
        for (const auto& i : s.init) visit_stmt(*i);
        if (s.expr) visit_expr(*s.expr);
        for (const auto& u : s.updates) visit_expr(*u);
        scoped(*s.children.front());
        pop_scope();
        break;
      case StmtKind::ForEach: {
        push_scope();
        auto t = visit_type(*s.type);
        visit_expr(*s.expr);
        const auto& d = s.declarators.front();
        declare(d.name, d.name_span, t);
        scoped(*s.children.front());
        pop_scope();
        break;
      }
      case StmtKind::Block:
        push_scope();
        for (const auto& c : s.children) visit_stmt(*c);
        pop_scope();
        break;
      case StmtKind::Try:
        visit_stmt(*s.children.front());
        for (const auto& c : s.catches) {
          push_scope();
          declare(c.var.name, c.var.name_span, visit_type(c.type));
          visit_stmt(*c.block);
          pop_scope();
        }
        if (s.finally_block) visit_stmt(*s.finally_block);
        break;
      case StmtKind::Break:
      case StmtKind::Continue:
      case StmtKind::Empty: break;
    }
  }

  // A nested statement gets its own scope even when it is not a block.
  void scoped(const Stmt& s) {
    push_scope();
    visit_stmt(s);
    pop_scope();
  }

  // Expressions ----------------------------------------------------------------

  // Result of classifying a receiver: a value, a type, or a package prefix.
  struct Receiver {
    enum class Kind { Value, Type, Package } kind = Kind::Value;
    TypeRef type;
    std::vector<std::string> package;
    const Expr* head = nullptr;  // first Name of a package path

    static Receiver value(TypeRef t) { return {Kind::Value, std::move(t), {}, nullptr}; }
    static Receiver of_type(TypeRef t) { return {Kind::Type, std::move(t), {}, nullptr}; }
  };

  TypeRef set(const Expr& e, TypeRef t) {
    out_.annotations.expr_types[static_cast<std::size_t>(e.id)] = t;
    return t;
  }

  [[noreturn]] void undeclared(const Expr& name) {
    throw AnalysisError(name.text, name.name_span, "use of undeclared variable");
  }

  TypeRef variable_ref(const Expr& name) {
    const auto* v = out_.symbols.find(current_scope_, name.text);
    if (!v) undeclared(name);
    record_variable(name.name_span, name.text, v->type);
    return set(name, v->type);
  }

  Receiver classify(const Expr& e) {
    if (e.kind == ExprKind::Name) {
      if (out_.symbols.find(current_scope_, e.text)) return Receiver::value(variable_ref(e));
      if (names_type(e.text)) {
        auto t = resolve_segments({e.text});
        record_type(e.name_span, e.text, t);
        return Receiver::of_type(set(e, t));
      }
      Receiver r;
      r.kind = Receiver::Kind::Package;
      r.package = {e.text};
      r.head = &e;
      return r;
    }
    if (e.kind == ExprKind::FieldAccess) {
      auto inner = classify(*e.receiver);
      if (inner.kind == Receiver::Kind::Package) {
        auto segs = inner.package;
        segs.push_back(e.text);
        if (capitalized(e.text)) {
          auto t = TypeRef::resolved([&] {
            std::string fqn;
            for (std::size_t i = 0; i < segs.size(); ++i) fqn += (i ? "." : "") + segs[i];
            return fqn;
          }());
          record_type({inner.head->span.first, e.name_span.last}, t.fqn, t);
          return Receiver::of_type(set(e, t));
        }
        inner.package = std::move(segs);
        return inner;
      }
      return Receiver::value(member_access(e, inner.type));
    }
    return Receiver::value(visit_expr(e));
  }

  TypeRef value_of(const Expr& e) {
    auto r = classify(e);
    if (r.kind == Receiver::Kind::Package) undeclared(*r.head);
    return r.type;
  }

  TypeRef member_access(const Expr& e, const TypeRef& owner) {
    if (owner.local) {
      auto it = std::find_if(classes_.begin(), classes_.end(),
                             [&](const auto& kv) { return kv.second.fqn == owner.fqn; });
      if (it != classes_.end())
        if (auto f = it->second.fields.find(e.text); f != it->second.fields.end())
          return set(e, f->second);
    }
    IdentifierUse u;
    u.kind = EntryKind::Field;
    u.span = e.name_span;
    u.name = e.text;
    u.has_owner = true;
    u.owner = owner;
    u.result = fresh_hole();
    out_.annotations.uses.push_back(u);
    return set(e, u.result);
  }

  TypeRef visit_call(const Expr& e) {
    IdentifierUse u;
    u.kind = EntryKind::Method;
    u.span = e.name_span;
    u.name = e.text;
    if (e.receiver) {
      u.has_owner = true;
      u.owner = value_of(*e.receiver);
    } else if (current_class_ && current_class_->methods.contains({e.text, e.operands.size()})) {
      u.has_owner = true;
      u.owner = TypeRef::resolved(current_class_->fqn, true);
    }
    for (const auto& a : e.operands) u.args.push_back(visit_expr(*a));
    u.result = fresh_hole();
    out_.annotations.uses.push_back(u);
    return set(e, u.result);
  }

  TypeRef visit_binary(const Expr& e) {
    auto l = visit_expr(*e.operands[0]);
    auto r = visit_expr(*e.operands[1]);
    const auto& op = e.text;
    if (op == "&&" || op == "||" || op == "==" || op == "!=" || op == "<" || op == ">" ||
        op == "<=" || op == ">=")
      return TypeRef::resolved("boolean");
    if (op == "+" && ((!l.is_hole() && l.fqn == "java.lang.String") ||
                      (!r.is_hole() && r.fqn == "java.lang.String")))
      return TypeRef::resolved("java.lang.String");
    if (l.is_primitive() && r.is_primitive()) {
      if (l.fqn == "boolean" && r.fqn == "boolean" && (op == "&" || op == "|" || op == "^"))
        return TypeRef::resolved("boolean");
      auto p = promote(l.fqn, r.fqn);
      if (!p.empty()) {
        if (op == "<<" || op == ">>" || op == ">>>") return TypeRef::resolved(promote(l.fqn, "int"));
        return TypeRef::resolved(p);
      }
    }
    return fresh_hole();
  }

  TypeRef visit_expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Literal:
        switch (e.literal) {
          case LiteralKind::String: return set(e, TypeRef::resolved("java.lang.String"));
          case LiteralKind::Char: return set(e, TypeRef::resolved("char"));
          case LiteralKind::Int: return set(e, TypeRef::resolved("int"));
          case LiteralKind::Long: return set(e, TypeRef::resolved("long"));
          case LiteralKind::Float: return set(e, TypeRef::resolved("float"));
          case LiteralKind::Double: return set(e, TypeRef::resolved("double"));
          case LiteralKind::Boolean: return set(e, TypeRef::resolved("boolean"));
          case LiteralKind::Null: return set(e, fresh_hole());
        }
        break;
      case ExprKind::Name: return variable_ref(e);
      case ExprKind::This:
        return set(e, current_class_ ? TypeRef::resolved(current_class_->fqn, true) : fresh_hole());
      case ExprKind::FieldAccess: {
        auto r = classify(e);
        if (r.kind == Receiver::Kind::Package) undeclared(*r.head);
        if (r.kind == Receiver::Kind::Type) {
          // A bare type name is not a value.
          throw AnalysisError(r.type.is_hole() ? r.type.hole_name : r.type.fqn, e.span,
                              "type used as a value");
        }
        return r.type;
      }
      case ExprKind::Call: return visit_call(e);
      case ExprKind::New: {
        auto t = visit_type(*e.type);
        for (const auto& a : e.operands) visit_expr(*a);
        return set(e, t);
      }
      case ExprKind::Unary: {
        auto t = visit_expr(*e.operands[0]);
        if (e.text == "!") return set(e, TypeRef::resolved("boolean"));
        if (t.is_primitive() && (e.text == "-" || e.text == "+" || e.text == "~"))
          return set(e, TypeRef::resolved(promote(t.fqn, "int")));
        return set(e, t);
      }
      case ExprKind::Binary: return set(e, visit_binary(e));
      case ExprKind::Assign: {
        auto lhs = visit_expr(*e.operands[0]);
        visit_expr(*e.operands[1]);
        return set(e, lhs);
      }
      case ExprKind::Conditional: {
        visit_expr(*e.operands[0]);
        auto a = visit_expr(*e.operands[1]);
        auto b = visit_expr(*e.operands[2]);
        if (!a.is_hole() && a == b) return set(e, a);
        return set(e, fresh_hole());
      }
      case ExprKind::InstanceOf:
        visit_expr(*e.operands[0]);
        visit_type(*e.type);
        return set(e, TypeRef::resolved("boolean"));
    }
    return set(e, fresh_hole());
  }

  const Ast& ast_;
  Inference out_;
  int current_scope_ = -1;
  int next_hole_ = 0;
  std::map<std::string, std::string> imports_;
  std::map<std::string, LocalClass> classes_;
  std::map<std::string, TypeRef> named_holes_;
  LocalClass* current_class_ = nullptr;
};

}  // namespace

Inference infer(const Ast& ast) { return Inferrer(ast).run(); }

}  // namespace fqnres::frontend
