#include <algorithm>
#include <set>

#include "fqnres/solver.hpp"

namespace fqnres::solver {

CoveringProblem CoveringProblem::make(std::size_t num_vars, std::vector<std::vector<Var>> clauses,
                                      std::vector<Weight> weights) {
  CoveringProblem p;
  p.num_vars = num_vars;
  for (auto& c : clauses) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  p.clauses = std::move(clauses);
  p.weights = std::move(weights);
  p.validate();
  return p;
}

void CoveringProblem::validate() const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& c = clauses[i];
    if (c.empty()) throw Error("clause " + std::to_string(i) + " is empty");
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] >= num_vars)
        throw Error("clause " + std::to_string(i) + " references variable " +
                    std::to_string(c[j]) + " outside [0, " + std::to_string(num_vars) + ")");
      if (j && c[j - 1] >= c[j]) throw Error("clause " + std::to_string(i) + " is not normalised");
    }
  }
  for (auto v : forced)
    if (v >= num_vars) throw Error("forced variable out of range");
  if (!weights.empty() && weights.size() != num_vars)
    throw Error("weight vector has " + std::to_string(weights.size()) + " entries for " +
                std::to_string(num_vars) + " variables");
  if ((!dependency_of.empty() && dependency_of.size() != num_vars) ||
      (!artifact_of.empty() && artifact_of.size() != num_vars))
    throw Error("label vectors must cover every variable");
}

bool CoveringProblem::conflicts(Var a, Var b) const {
  if (artifact_of.empty() || dependency_of.empty()) return false;
  return artifact_of[a] >= 0 && artifact_of[a] == artifact_of[b] &&
         dependency_of[a] != dependency_of[b];
}

CoveringProblem preprocess(const CoveringProblem& problem) {
  problem.validate();
  CoveringProblem reduced = problem;
  std::set<Var> forced(problem.forced.begin(), problem.forced.end());

  std::vector<std::vector<Var>> remaining = problem.clauses;
  while (true) {
    bool grew = false;
    for (const auto& c : remaining)
      if (c.size() == 1 && forced.insert(c.front()).second) grew = true;
    auto satisfied = [&](const std::vector<Var>& c) {
      return std::any_of(c.begin(), c.end(), [&](Var v) { return forced.contains(v); });
    };
    auto before = remaining.size();
    std::erase_if(remaining, satisfied);
    if (!grew && remaining.size() == before) break;
  }
  reduced.clauses = std::move(remaining);
  reduced.forced.assign(forced.begin(), forced.end());
  return reduced;
}

Weight cost_of(const CoveringProblem& problem, const std::vector<Var>& vars) {
  Weight w = 0;
  for (auto v : vars) w += problem.weight(v);
  return w;
}

bool check(const CoveringProblem& problem, const Model& model) {
  const auto& t = model.true_vars;
  auto has = [&](Var v) { return std::binary_search(t.begin(), t.end(), v); };
  for (auto v : problem.forced)
    if (!has(v)) return false;
  for (const auto& c : problem.clauses)
    if (std::none_of(c.begin(), c.end(), has)) return false;
  return true;
}

bool respects_exclusions(const CoveringProblem& problem, const Model& model) {
  const auto& t = model.true_vars;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (problem.conflicts(t[i], t[j])) return false;
  return true;
}

namespace {

std::size_t distinct_dependencies(const CoveringProblem& problem, const std::vector<Var>& vars) {
  std::set<int> labels;
  for (auto v : vars)
    if (auto d = problem.dependency_label(v); d >= 0) labels.insert(d);
  return labels.size();
}

}  // namespace

bool better(const CoveringProblem& problem, const Model& a, const Model& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  auto da = distinct_dependencies(problem, a.true_vars);
  auto db = distinct_dependencies(problem, b.true_vars);
  if (da != db) return da < db;
  if (a.true_vars.size() != b.true_vars.size()) return a.true_vars.size() < b.true_vars.size();
  return a.true_vars < b.true_vars;
}

}  // namespace fqnres::solver
