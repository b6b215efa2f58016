#include "fqnres/coordinate.hpp"

#include <cctype>

#include "fqnres/error.hpp"

namespace fqnres {
namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
}

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return true;
}

}  // namespace

bool is_valid_version(std::string_view v) noexcept {
  if (v.empty()) return false;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };

  // Numeric form: digits(.digits)*([-+].+)?
  if (digit(v.front())) {
    std::size_t i = 0;
    while (true) {
      std::size_t start = i;
      while (i < v.size() && digit(v[i])) ++i;
      if (i == start) break;
      if (i == v.size()) return true;
      if (v[i] == '.') {
        ++i;
        continue;
      }
      if ((v[i] == '-' || v[i] == '+') && i + 1 < v.size()) {
        for (std::size_t j = i + 1; j < v.size(); ++j)
          if (std::isspace(static_cast<unsigned char>(v[j])) || v[j] == ':') return false;
        return true;
      }
      break;
    }
  }

  // Literal tag: a letter followed by name characters.
  if (!std::isalpha(static_cast<unsigned char>(v.front()))) return false;
  return is_name(v);
}

void DependencyCoordinate::validate() const {
  if (!is_name(group)) throw Error("invalid dependency group '" + group + "'");
  if (!is_name(artifact)) throw Error("invalid dependency artifact '" + artifact + "'");
  if (!is_valid_version(version)) throw Error("invalid dependency version '" + version + "'");
}

DependencyCoordinate DependencyCoordinate::parse(std::string_view text) {
  auto first = text.find(':');
  auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
    throw Error("malformed dependency coordinate '" + std::string(text) +
                "' (expected group:artifact:version)");
  DependencyCoordinate c{std::string(text.substr(0, first)),
                         std::string(text.substr(first + 1, second - first - 1)),
                         std::string(text.substr(second + 1))};
  c.validate();
  return c;
}

std::optional<DependencyCoordinate> DependencyCoordinate::try_parse(std::string_view text) noexcept {
  try {
    return parse(text);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace fqnres
