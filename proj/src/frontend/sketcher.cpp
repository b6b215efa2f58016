#include "fqnres/frontend/sketcher.hpp"

#include <map>

namespace fqnres::frontend {
namespace {

// Owner, parameter, return and field positions: a known external type or `?`.
// Types declared by the snippet itself cannot appear in any library
// signature, so they are holes too.
std::string position(const TypeRef& t) {
  if (t.is_hole() || t.local) return std::string(kHole);
  return t.fqn;
}

Sketch to_sketch(const IdentifierUse& use) {
  Sketch s;
  s.kind = use.kind;
  if (use.kind == EntryKind::Type) {
    if (use.type.is_hole()) {
      s.owner = std::string(kHole);
      s.simple_name = use.type.hole_name;
    } else {
      auto dot = use.type.fqn.rfind('.');
      s.owner = dot == std::string::npos ? std::string() : use.type.fqn.substr(0, dot);
      s.simple_name = dot == std::string::npos ? use.type.fqn : use.type.fqn.substr(dot + 1);
    }
    return s;
  }
  s.owner = use.has_owner ? position(use.owner) : std::string(kHole);
  s.simple_name = use.name;
  if (use.kind == EntryKind::Method) {
    for (const auto& a : use.args) s.param_types.push_back(position(a));
    s.return_type = position(use.result);
  } else {
    s.field_type = position(use.result);
  }
  return s;
}

}  // namespace

bool is_sketchable(const IdentifierUse& use) {
  if (use.kind == EntryKind::Type) {
    if (use.type.is_hole()) return !use.type.hole_name.empty();
    return !use.type.is_primitive() && !use.type.local;
  }
  return !(use.has_owner && use.owner.local);
}

std::vector<Sketch> make_sketches(const Ast&, const Annotations& annotations) {
  std::vector<Sketch> sketches;
  std::map<std::string, std::size_t> by_render;
  for (const auto& use : annotations.uses) {
    if (!is_sketchable(use)) continue;
    auto s = to_sketch(use);
    auto [it, inserted] = by_render.emplace(s.render(), sketches.size());
    if (inserted) sketches.push_back(std::move(s));
    sketches[it->second].occurrences.push_back(use.span);
  }
  return sketches;
}

std::vector<Sketch> sketch_source(std::string_view source, bool allow_wrapping) {
  auto snippet = wrap(source, allow_wrapping);
  auto ast = parse(snippet);
  auto inference = infer(ast);
  return make_sketches(ast, inference.annotations);
}

std::string format_sketches(const std::vector<Sketch>& sketches, bool with_spans) {
  std::string out;
  for (const auto& s : sketches) {
    out += s.has_holes() ? "U " : "R ";
    out += s.render();
    out += '\n';
    if (!with_spans) continue;
    out += ' ';
    for (const auto& span : s.occurrences) out += " " + span.str();
    out += '\n';
  }
  return out;
}

}  // namespace fqnres::frontend
