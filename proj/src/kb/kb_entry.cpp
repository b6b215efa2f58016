#include "fqnres/kb_entry.hpp"

#include <cctype>

#include "fqnres/error.hpp"

namespace fqnres {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_name(std::string_view name, std::string_view what) {
  if (!is_qualified_name(name))
    throw Error("invalid " + std::string(what) + " '" + std::string(name) + "'");
}

// Splits `a.b.C.name` into (`a.b.C`, `name`).
std::pair<std::string, std::string> split_last(std::string_view dotted, std::string_view what) {
  auto dot = dotted.rfind('.');
  if (dot == std::string_view::npos)
    throw Error(std::string(what) + " '" + std::string(dotted) + "' has no owner type");
  return {std::string(dotted.substr(0, dot)), std::string(dotted.substr(dot + 1))};
}

KbEntry parse_method(std::string_view text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      text.find('(', open + 1) != std::string_view::npos ||
      text.find(')', close + 1) != std::string_view::npos)
    throw Error("mismatched parentheses in method '" + std::string(text) + "'");

  KbEntry e;
  e.kind = EntryKind::Method;
  auto [owner, name] = split_last(text.substr(0, open), "method");
  e.owner_fqn = std::move(owner);
  e.simple_name = std::move(name);

  auto params = text.substr(open + 1, close - open - 1);
  if (!trim(params).empty()) {
    std::size_t pos = 0;
    while (true) {
      auto comma = params.find(',', pos);
      auto p = trim(params.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
      require_name(p, "parameter type");
      e.param_types.emplace_back(p);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  e.return_type = std::string(trim(text.substr(close + 1)));
  if (e.return_type.empty()) throw Error("method '" + std::string(text) + "' has no return type");
  return e;
}

}  // namespace

char kind_tag(EntryKind kind) noexcept {
  switch (kind) {
    case EntryKind::Type: return 'T';
    case EntryKind::Method: return 'M';
    case EntryKind::Field: return 'F';
  }
  return '?';
}

std::string_view kind_name(EntryKind kind) noexcept {
  switch (kind) {
    case EntryKind::Type: return "type";
    case EntryKind::Method: return "method";
    case EntryKind::Field: return "field";
  }
  return "?";
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_' || c == '$' || u >= 0x80)) return false;
  }
  return true;
}

bool is_qualified_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  std::size_t pos = 0;
  while (true) {
    auto dot = name.find('.', pos);
    if (!is_identifier(name.substr(pos, dot == std::string_view::npos ? dot : dot - pos)))
      return false;
    if (dot == std::string_view::npos) return true;
    pos = dot + 1;
  }
}

std::string KbEntry::fqn() const {
  switch (kind) {
    case EntryKind::Type:
      return package_name.empty() ? simple_name : package_name + "." + simple_name;
    case EntryKind::Method: {
      std::string s = owner_fqn + "." + simple_name + "(";
      for (std::size_t i = 0; i < param_types.size(); ++i) {
        if (i) s += ",";
        s += param_types[i];
      }
      return s + ")" + return_type;
    }
    case EntryKind::Field:
      return owner_fqn + "." + simple_name + ":" + field_type;
  }
  return {};
}

std::string KbEntry::listing_line() const {
  std::string line(1, kind_tag(kind));
  line += ' ';
  line += fqn();
  if (supertype) line += " <: " + *supertype;
  return line;
}

void KbEntry::validate() const {
  if (!is_identifier(simple_name)) throw Error("invalid simple name '" + simple_name + "'");
  switch (kind) {
    case EntryKind::Type:
      if (!owner_fqn.empty() || !param_types.empty() || !return_type.empty() || !field_type.empty())
        throw Error("type entry '" + fqn() + "' carries member data");
      if (!package_name.empty()) require_name(package_name, "package");
      if (supertype) require_name(*supertype, "supertype");
      break;
    case EntryKind::Method:
      require_name(owner_fqn, "owner type");
      for (const auto& p : param_types) require_name(p, "parameter type");
      require_name(return_type, "return type");
      if (!field_type.empty() || supertype) throw Error("method entry carries type/field data");
      break;
    case EntryKind::Field:
      require_name(owner_fqn, "owner type");
      require_name(field_type, "field type");
      if (!param_types.empty() || !return_type.empty() || supertype)
        throw Error("field entry carries method/type data");
      break;
  }
}

KbEntry KbEntry::parse_listing(std::string_view line, DependencyCoordinate dependency) {
  line = trim(line);
  if (line.size() < 3 || line[1] != ' ')
    throw Error("expected '<T|M|F> <fqn>', got '" + std::string(line) + "'");
  auto body = trim(line.substr(2));

  KbEntry e;
  switch (line[0]) {
    case 'T': {
      e.kind = EntryKind::Type;
      auto sub = body.find("<:");
      auto name = trim(body.substr(0, sub));
      if (sub != std::string_view::npos) {
        auto super = trim(body.substr(sub + 2));
        require_name(super, "supertype");
        e.supertype = std::string(super);
      }
      require_name(name, "type name");
      auto dot = name.rfind('.');
      if (dot == std::string_view::npos) {
        e.simple_name = std::string(name);
      } else {
        e.package_name = std::string(name.substr(0, dot));
        e.simple_name = std::string(name.substr(dot + 1));
      }
      break;
    }
    case 'M':
      e = parse_method(body);
      break;
    case 'F': {
      e.kind = EntryKind::Field;
      auto colon = body.find(':');
      if (colon == std::string_view::npos || body.find(':', colon + 1) != std::string_view::npos)
        throw Error("field '" + std::string(body) + "' must have the form owner.name:Type");
      auto [owner, name] = split_last(trim(body.substr(0, colon)), "field");
      e.owner_fqn = std::move(owner);
      e.simple_name = std::move(name);
      e.field_type = std::string(trim(body.substr(colon + 1)));
      break;
    }
    default:
      throw Error(std::string("unknown record kind '") + line[0] + "'");
  }
  e.dependency = std::move(dependency);
  e.validate();
  return e;
}

}  // namespace fqnres
