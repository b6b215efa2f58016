#include <algorithm>

#include "fqnres/error.hpp"
#include "fqnres/frontend/sketcher.hpp"
#include "fqnres/resolver.hpp"

namespace fqnres::resolver {

Resolution::SketchStatus Resolution::status(std::size_t sketch) const {
  if (bindings.contains(sketch)) return SketchStatus::Bound;
  if (std::find(assumed_builtin.begin(), assumed_builtin.end(), sketch) != assumed_builtin.end())
    return SketchStatus::AssumedBuiltin;
  return SketchStatus::Unresolved;
}

Resolution resolve_sketches(std::vector<Sketch> sketches, const kb::KnowledgeBase& kb,
                            const DependencySet& declared, const Options& options) {
  Resolution res;
  auto table = build_problem(sketches, kb, declared, options);
  res.sketches = std::move(sketches);
  res.unresolved = table.unresolved;
  res.assumed_builtin = table.assumed_builtin;
  res.cnf_dump = solver::dump(table.problem, table.variable_names());

  solver::Model model;
  try {
    model = solver::solve_min(table.problem);
  } catch (const solver::Unsatisfiable&) {
    // Every cover needs two versions of some artifact; report it and solve
    // without the exclusion rule.
    res.warnings.push_back(
        "no cover uses a single version per artifact; version exclusion was relaxed");
    auto relaxed = table.problem;
    std::fill(relaxed.artifact_of.begin(), relaxed.artifact_of.end(), -1);
    model = solver::solve_min(relaxed);
  }
  res.objective_cost = model.cost;

  std::vector<char> selected(table.candidates.size(), 0);
  for (auto v : model.true_vars) selected[v] = 1;

  for (std::size_t c = 0; c < table.problem.clauses.size(); ++c) {
    auto sketch = table.clause_sketch[c];
    std::vector<solver::Var> covering;
    for (auto v : table.problem.clauses[c])
      if (selected[v]) covering.push_back(v);
    // Clauses are sorted, so covering.front() has the smallest variable key.
    const auto& chosen = table.candidates[covering.front()];
    const auto& entries = chosen.entries.at(sketch);
    const KbEntry* entry = entries.front();

    Ambiguity amb;
    amb.sketch = sketch;
    amb.chosen = chosen.variable_key + " " + entry->fqn();
    for (std::size_t i = 1; i < covering.size(); ++i)
      amb.alternatives.push_back(table.candidates[covering[i]].variable_key);
    for (std::size_t i = 1; i < entries.size(); ++i)
      amb.alternatives.push_back(chosen.variable_key + " " + entries[i]->fqn());
    if (!amb.alternatives.empty()) res.ambiguities.push_back(std::move(amb));

    res.bindings.emplace(sketch, Binding{*entry, chosen.variable_key});
    res.dependencies.insert(entry->dependency);
    res.imports.insert(entry->import_type());
  }
  return res;
}

Resolution resolve(std::string_view source, const kb::KnowledgeBase& kb,
                   const DependencySet& declared, const Options& options) {
  return resolve_sketches(frontend::sketch_source(source, options.allow_wrapping), kb, declared,
                          options);
}

}  // namespace fqnres::resolver
