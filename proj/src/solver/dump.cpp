#include <sstream>

#include "fqnres/solver.hpp"

namespace fqnres::solver {

std::string dump(const CoveringProblem& problem, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "p cover " << problem.num_vars << ' ' << problem.clauses.size() + problem.forced.size()
      << '\n';
  for (std::size_t v = 0; v < names.size() && v < problem.num_vars; ++v)
    out << "c " << v + 1 << ' ' << names[v] << '\n';
  for (Var v = 0; v < problem.num_vars; ++v)
    if (problem.weight(v) != 1) out << "w " << v + 1 << ' ' << problem.weight(v) << '\n';
  if (!problem.dependency_of.empty() && !problem.artifact_of.empty())
    for (Var v = 0; v < problem.num_vars; ++v)
      out << "l " << v + 1 << ' ' << problem.dependency_of[v] << ' ' << problem.artifact_of[v]
          << '\n';
  for (auto v : problem.forced) out << v + 1 << " 0\n";
  for (const auto& c : problem.clauses) {
    for (auto v : c) out << v + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

ParsedDump parse_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  ParsedDump result;
  auto& p = result.problem;

  auto fail = [&](const std::string& why) {
    throw Error("cover dump line " + std::to_string(line_no) + ": " + why);
  };
  auto read_id = [&](std::istringstream& ls) -> Var {
    long long id = 0;
    if (!(ls >> id) || id < 1 || static_cast<std::size_t>(id) > p.num_vars)
      fail("bad variable id");
    return static_cast<Var>(id - 1);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string p_tag, format;
      if (!(ls >> p_tag >> format >> p.num_vars >> declared_clauses) || p_tag != "p" ||
          format != "cover")
        fail("expected 'p cover <vars> <clauses>'");
      have_header = true;
      continue;
    }
    switch (line.front()) {
      case 'c': {
        ls.ignore(1);
        auto v = read_id(ls);
        std::string name;
        ls >> std::ws;
        std::getline(ls, name);
        if (result.names.size() < p.num_vars) result.names.resize(p.num_vars);
        result.names[v] = name;
        break;
      }
      case 'w': {
        ls.ignore(1);
        auto v = read_id(ls);
        Weight w = 0;
        if (!(ls >> w)) fail("bad weight");
        if (p.weights.empty()) p.weights.assign(p.num_vars, 1);
        p.weights[v] = w;
        break;
      }
      case 'l': {
        ls.ignore(1);
        auto v = read_id(ls);
        int dep = 0, art = 0;
        if (!(ls >> dep >> art)) fail("bad label");
        if (p.dependency_of.empty()) {
          p.dependency_of.assign(p.num_vars, -1);
          p.artifact_of.assign(p.num_vars, -1);
        }
        p.dependency_of[v] = dep;
        p.artifact_of[v] = art;
        break;
      }
      default: {
        std::vector<Var> clause;
        while (true) {
          long long id = 0;
          if (!(ls >> id)) fail("clause not terminated by 0");
          if (id == 0) break;
          if (id < 0 || static_cast<std::size_t>(id) > p.num_vars) fail("bad variable id");
          clause.push_back(static_cast<Var>(id - 1));
        }
        p.clauses.push_back(std::move(clause));
      }
    }
  }
  if (!have_header) throw Error("cover dump: missing 'p cover' header");
  if (p.clauses.size() != declared_clauses)
    throw Error("cover dump: header declares " + std::to_string(declared_clauses) +
                " clauses, found " + std::to_string(p.clauses.size()));
  auto clauses = std::move(p.clauses);
  auto weights = std::move(p.weights);
  auto deps = std::move(p.dependency_of);
  auto arts = std::move(p.artifact_of);
  p = CoveringProblem::make(p.num_vars, std::move(clauses), std::move(weights));
  p.dependency_of = std::move(deps);
  p.artifact_of = std::move(arts);
  p.validate();
  return result;
}

}  // namespace fqnres::solver
