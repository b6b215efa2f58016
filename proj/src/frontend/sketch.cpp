#include "fqnres/sketch.hpp"

#include <algorithm>

#include "fqnres/error.hpp"

namespace fqnres {
namespace {

void require_part(std::string_view part, std::string_view text) {
  if (!is_hole(part) && !is_qualified_name(part))
    throw Error("malformed sketch '" + std::string(text) + "'");
}

}  // namespace

std::string Sketch::render() const {
  std::string s;
  if (kind == EntryKind::Type && owner.empty())
    s = simple_name;
  else
    s = owner + "." + simple_name;
  if (kind == EntryKind::Method) {
    s += "(";
    for (std::size_t i = 0; i < param_types.size(); ++i) {
      if (i) s += ",";
      s += param_types[i];
    }
    s += ")" + return_type;
  } else if (kind == EntryKind::Field) {
    s += ":" + field_type;
  }
  return s;
}

bool Sketch::has_holes() const {
  if (is_hole(owner)) return true;
  switch (kind) {
    case EntryKind::Type: return false;
    case EntryKind::Method:
      return is_hole(return_type) ||
             std::any_of(param_types.begin(), param_types.end(),
                         [](const std::string& p) { return is_hole(p); });
    case EntryKind::Field: return is_hole(field_type);
  }
  return false;
}

Sketch Sketch::parse(std::string_view text) {
  Sketch s;
  auto open = text.find('(');
  auto colon = text.find(':');
  std::string_view head = text;
  if (open != std::string_view::npos) {
    s.kind = EntryKind::Method;
    auto close = text.find(')', open);
    if (close == std::string_view::npos) throw Error("malformed sketch '" + std::string(text) + "'");
    head = text.substr(0, open);
    auto params = text.substr(open + 1, close - open - 1);
    if (!params.empty()) {
      std::size_t pos = 0;
      while (true) {
        auto comma = params.find(',', pos);
        auto p = params.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        require_part(p, text);
        s.param_types.emplace_back(p);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    }
    s.return_type = std::string(text.substr(close + 1));
    require_part(s.return_type, text);
  } else if (colon != std::string_view::npos) {
    s.kind = EntryKind::Field;
    head = text.substr(0, colon);
    s.field_type = std::string(text.substr(colon + 1));
    require_part(s.field_type, text);
  }

  auto dot = head.rfind('.');
  if (dot == std::string_view::npos) {
    if (s.kind != EntryKind::Type) throw Error("sketch '" + std::string(text) + "' has no owner");
    s.owner.clear();
    s.simple_name = std::string(head);
  } else {
    s.owner = std::string(head.substr(0, dot));
    s.simple_name = std::string(head.substr(dot + 1));
    require_part(s.owner, text);
  }
  if (!is_identifier(s.simple_name)) throw Error("malformed sketch '" + std::string(text) + "'");
  return s;
}

}  // namespace fqnres
