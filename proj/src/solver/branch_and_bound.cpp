// Exact minimum-weight hitting set by depth-first branch and bound.
//
// Branching picks the uncovered clause with the fewest admissible variables
// and splits it into disjoint branches: "v1 true", "v1 false, v2 true", ...
// Every inclusion-minimal model is reachable this way, and the optimum is
// always inclusion-minimal, so exploring every branch whose lower bound does
// not exceed the incumbent cost is exact under the full tie-break.

#include <algorithm>
#include <limits>
#include <optional>

#include "fqnres/solver.hpp"

namespace fqnres::solver {
namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const CoveringProblem& p)
      : p_(p), chosen_(p.num_vars, 0), excluded_(p.num_vars, 0) {}

  std::optional<Model> run() {
    Weight cost = 0;
    for (auto v : p_.forced) {
      if (!admissible(v)) return std::nullopt;
      chosen_[v] = 1;
      cost += p_.weight(v);
    }
    search(cost);
    return best_;
  }

 private:
  bool admissible(Var v) const {
    if (excluded_[v]) return false;
    if (p_.artifact_of.empty()) return true;
    for (Var u = 0; u < p_.num_vars; ++u)
      if (chosen_[u] && p_.conflicts(u, v)) return false;
    return true;
  }

  bool covered(const std::vector<Var>& c) const {
    return std::any_of(c.begin(), c.end(), [&](Var v) { return chosen_[v] != 0; });
  }

  void search(Weight cost) {
    // Collect uncovered clauses with their admissible variables.
    std::vector<std::vector<Var>> open;
    for (const auto& c : p_.clauses) {
      if (covered(c)) continue;
      std::vector<Var> avail;
      for (auto v : c)
        if (admissible(v)) avail.push_back(v);
      if (avail.empty()) return;  // dead end
      open.push_back(std::move(avail));
    }

    if (open.empty()) {
      Model m;
      for (Var v = 0; v < p_.num_vars; ++v)
        if (chosen_[v]) m.true_vars.push_back(v);
      m.cost = cost;
      if (!best_ || better(p_, m, *best_)) best_ = std::move(m);
      return;
    }

    if (best_ && lower_bound(cost, open) > best_->cost) return;

    auto pick = std::min_element(open.begin(), open.end(),
                                 [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const std::vector<Var> branch = *pick;
    std::vector<Var> newly_excluded;
    for (auto v : branch) {
      chosen_[v] = 1;
      search(cost + p_.weight(v));
      chosen_[v] = 0;
      excluded_[v] = 1;
      newly_excluded.push_back(v);
    }
    for (auto v : newly_excluded) excluded_[v] = 0;
  }

  // Sum of cheapest admissible weights over a greedy family of pairwise
  // disjoint open clauses.
  Weight lower_bound(Weight cost, std::vector<std::vector<Var>>& open) {
    std::sort(open.begin(), open.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<char> used(p_.num_vars, 0);
    Weight lb = cost;
    for (const auto& c : open) {
      if (std::any_of(c.begin(), c.end(), [&](Var v) { return used[v] != 0; })) continue;
      Weight cheapest = std::numeric_limits<Weight>::max();
      for (auto v : c) {
        cheapest = std::min(cheapest, p_.weight(v));
        used[v] = 1;
      }
      lb += cheapest;
    }
    return lb;
  }

  const CoveringProblem& p_;
  std::vector<char> chosen_;
  std::vector<char> excluded_;
  std::optional<Model> best_;
};

}  // namespace

Model solve_min(const CoveringProblem& problem, SolveOptions options) {
  problem.validate();
  const CoveringProblem reduced = options.preprocess ? preprocess(problem) : problem;
  auto model = BranchAndBound(reduced).run();
  if (!model) throw Unsatisfiable("no assignment satisfies the exclusion constraints");
  return *model;
}

}  // namespace fqnres::solver
