#include <optional>

#include "fqnres/solver.hpp"

namespace fqnres::solver {

Model brute_force_min(const CoveringProblem& problem) {
  problem.validate();
  if (problem.num_vars > kBruteForceMaxVars)
    throw Error("brute force is limited to " + std::to_string(kBruteForceMaxVars) +
                " variables, problem has " + std::to_string(problem.num_vars));

  std::vector<std::uint32_t> clause_masks;
  for (const auto& c : problem.clauses) {
    std::uint32_t m = 0;
    for (auto v : c) m |= 1u << v;
    clause_masks.push_back(m);
  }
  std::uint32_t forced_mask = 0;
  for (auto v : problem.forced) forced_mask |= 1u << v;

  std::optional<Model> best;
  const std::uint64_t limit = std::uint64_t{1} << problem.num_vars;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    auto mask = static_cast<std::uint32_t>(bits);
    if ((mask & forced_mask) != forced_mask) continue;
    bool ok = true;
    for (auto cm : clause_masks)
      if (!(mask & cm)) {
        ok = false;
        break;
      }
    if (!ok) continue;

    Model m;
    for (Var v = 0; v < problem.num_vars; ++v)
      if (mask & (1u << v)) m.true_vars.push_back(v);
    if (!respects_exclusions(problem, m)) continue;
    m.cost = cost_of(problem, m.true_vars);
    if (!best || better(problem, m, *best)) best = std::move(m);
  }
  if (!best) throw Unsatisfiable("no assignment satisfies the exclusion constraints");
  return *best;
}

}  // namespace fqnres::solver
