#include <algorithm>
#include <set>

#include "fqnres/frontend/lexer.hpp"
#include "fqnres/frontend/parser.hpp"
#include "fqnres/resolver.hpp"

namespace fqnres::resolver {
namespace {

struct Header {
  std::set<std::string> imports;
  std::optional<std::size_t> end;  // offset just past the last header token
};

// Package/import declarations at the top of the source, read from tokens so
// the snippet body does not have to parse.
Header read_header(std::string_view source) {
  using frontend::TokenKind;
  Header h;
  std::vector<frontend::Token> toks;
  try {
    toks = frontend::lex(source);
  } catch (const Error&) {
    return h;
  }
  std::size_t i = 0;
  auto statement_end = [&](std::size_t from) {
    while (from < toks.size() && !toks[from].is_op(";") && toks[from].kind != TokenKind::End) ++from;
    return from;
  };
  if (toks[i].is_keyword("package")) {
    i = statement_end(i);
    if (toks[i].kind == TokenKind::End) return h;
    h.end = toks[i].span.end();
    ++i;
  }
  while (toks[i].is_keyword("import")) {
    std::size_t start = i + 1;
    i = statement_end(i);
    if (toks[i].kind == TokenKind::End) break;
    std::string name;
    for (std::size_t j = start; j < i; ++j)
      if (!toks[j].is_keyword("static")) name += toks[j].text;
    h.imports.insert(name);
    h.end = toks[i].span.end();
    ++i;
  }
  return h;
}

bool needs_import(const std::string& fqn) {
  auto dot = fqn.rfind('.');
  if (dot == std::string::npos) return false;  // primitives, default package
  return fqn.substr(0, dot) != "java.lang";
}

}  // namespace

std::vector<std::string> patch_imports(const Resolution& resolution, std::string_view source) {
  auto header = read_header(source);
  std::vector<std::string> out;
  for (const auto& fqn : resolution.imports) {
    if (!needs_import(fqn) || header.imports.contains(fqn)) continue;
    auto pkg_star = fqn.substr(0, fqn.rfind('.')) + ".*";
    if (header.imports.contains(pkg_star)) continue;
    out.push_back(fqn);
  }
  return out;  // std::set iteration order is already sorted
}

std::string emit_patch(const Resolution& resolution, std::string_view source) {
  auto imports = patch_imports(resolution, source);
  if (imports.empty()) return std::string(source);

  std::string block;
  for (const auto& fqn : imports) block += "import " + fqn + ";\n";

  auto header = read_header(source);
  std::string out;
  if (!header.end) {
    out = block + std::string(source);
  } else {
    // After the line that ends the header.
    auto at = source.find('\n', *header.end);
    auto rest_of_line = source.substr(*header.end, at == std::string_view::npos ? at : at - *header.end);
    bool code_follows = rest_of_line.find_first_not_of(" \t\r") != std::string_view::npos &&
                        !rest_of_line.substr(rest_of_line.find_first_not_of(" \t\r")).starts_with("//");
    if (code_follows) {
      out = std::string(source.substr(0, *header.end)) + "\n" + block +
            std::string(source.substr(*header.end));
    } else if (at == std::string_view::npos) {
      out = std::string(source) + "\n" + block;
    } else {
      out = std::string(source.substr(0, at + 1)) + block + std::string(source.substr(at + 1));
    }
  }
  return out;
}

}  // namespace fqnres::resolver
