#include <algorithm>

#include "fqnres/error.hpp"
#include "fqnres/resolver.hpp"

namespace fqnres::resolver {

std::vector<std::string> ProblemTable::variable_names() const {
  std::vector<std::string> names;
  names.reserve(candidates.size());
  for (const auto& c : candidates) names.push_back(c.variable_key);
  return names;
}

ProblemTable build_problem(const std::vector<Sketch>& sketches, const kb::KnowledgeBase& kb,
                           const DependencySet& declared, const Options& options) {
  ProblemTable table;
  std::vector<std::vector<kb::LookupHit>> hits(sketches.size());
  std::map<std::string, const KbEntry*> keys;  // key -> a representative entry

  for (std::size_t i = 0; i < sketches.size(); ++i) {
    hits[i] = kb.lookup(sketches[i]);
    if (hits[i].empty()) {
      if (!options.strict && !sketches[i].has_holes())
        table.assumed_builtin.push_back(i);
      else
        table.unresolved.push_back(i);
      continue;
    }
    for (const auto& h : hits[i]) keys.emplace(h.variable_key, h.entry);
  }

  if (options.strict && !table.unresolved.empty()) {
    std::string msg = "no knowledge-base candidates for:";
    for (auto i : table.unresolved) msg += " " + sketches[i].render();
    throw ResolutionError(msg);
  }
  if (keys.empty() && !table.unresolved.empty())
    throw ResolutionError("knowledge base cannot cover any sketch");

  // Variables in sorted key order; dependency and artifact labels likewise.
  std::map<std::string, solver::Var> var_of;
  std::map<DependencyCoordinate, int> dep_label;
  std::map<std::pair<std::string, std::string>, int> artifact_label;
  for (const auto& [key, entry] : keys) {
    var_of.emplace(key, static_cast<solver::Var>(table.candidates.size()));
    Candidate c;
    c.variable_id = static_cast<solver::Var>(table.candidates.size());
    c.variable_key = key;
    c.dependency = entry->dependency;
    c.import_type = entry->import_type();
    table.candidates.push_back(std::move(c));
    dep_label.emplace(entry->dependency, 0);
    artifact_label.emplace(std::make_pair(entry->dependency.group, entry->dependency.artifact), 0);
  }
  int n = 0;
  for (auto& [dep, label] : dep_label) label = n++;
  n = 0;
  for (auto& [art, label] : artifact_label) label = n++;

  std::vector<std::vector<solver::Var>> clauses;
  for (std::size_t i = 0; i < sketches.size(); ++i) {
    if (hits[i].empty()) continue;
    std::vector<solver::Var> clause;
    for (const auto& h : hits[i]) {
      auto v = var_of.at(h.variable_key);
      clause.push_back(v);
      table.candidates[v].entries[i].push_back(h.entry);
    }
    clauses.push_back(std::move(clause));
    table.clause_sketch.push_back(i);
  }
  for (auto& c : table.candidates)
    for (auto& [sketch, entries] : c.entries)
      std::sort(entries.begin(), entries.end(),
                [](const KbEntry* a, const KbEntry* b) { return a->fqn() < b->fqn(); });

  std::vector<solver::Weight> weights;
  for (const auto& c : table.candidates) weights.push_back(declared.contains(c.dependency) ? 0 : 1);

  table.problem = solver::CoveringProblem::make(table.candidates.size(), std::move(clauses),
                                                std::move(weights));
  for (const auto& c : table.candidates) {
    table.problem.dependency_of.push_back(dep_label.at(c.dependency));
    table.problem.artifact_of.push_back(
        options.exclusive_versions
            ? artifact_label.at({c.dependency.group, c.dependency.artifact})
            : -1);
  }
  table.problem.validate();
  return table;
}

}  // namespace fqnres::resolver
