#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fqnres/error.hpp"

namespace fqnres::solver {

using Var = std::uint32_t;
using Weight = std::uint64_t;

/// Side constraints admit no model (only possible with exclusion labels).
class Unsatisfiable : public Error {
 public:
  using Error::Error;
};

/// A positive CNF: every clause must contain at least one true variable.
///
/// Optional labels tie variables to the dependency they come from. They feed
/// the tie-break (fewest distinct dependencies) and the exclusion rule: two
/// variables with the same artifact label but different dependency labels may
/// not both be true.
struct CoveringProblem {
  std::size_t num_vars = 0;
  std::vector<std::vector<Var>> clauses;  // sorted, duplicate-free, non-empty
  std::vector<Var> forced;                // sorted; always true in any model
  std::vector<Weight> weights;            // empty = all ones
  std::vector<int> dependency_of;         // empty = unlabelled; -1 = no label
  std::vector<int> artifact_of;

  /// Normalises clauses and validates. Throws fqnres::Error on an empty
  /// clause or an out-of-range variable.
  static CoveringProblem make(std::size_t num_vars, std::vector<std::vector<Var>> clauses,
                              std::vector<Weight> weights = {});

  void validate() const;

  Weight weight(Var v) const { return weights.empty() ? 1 : weights[v]; }
  int dependency_label(Var v) const { return dependency_of.empty() ? -1 : dependency_of[v]; }
  bool conflicts(Var a, Var b) const;
};

struct Model {
  std::vector<Var> true_vars;  // sorted
  Weight cost = 0;

  friend bool operator==(const Model&, const Model&) = default;
};

/// Forces singleton-clause variables and drops every clause they satisfy,
/// to a fixpoint. The result carries the accumulated `forced` set.
CoveringProblem preprocess(const CoveringProblem& problem);

struct SolveOptions {
  bool preprocess = true;
};

/// Exact minimum by branch and bound. Models are ordered by
/// (cost, distinct dependency labels, cardinality, lexicographic ids); the
/// least one is returned, so the result is unique.
Model solve_min(const CoveringProblem& problem, SolveOptions options = {});

inline constexpr std::size_t kBruteForceMaxVars = 25;

/// Exhaustive reference solver with the same ordering. Throws fqnres::Error
/// when num_vars exceeds kBruteForceMaxVars.
Model brute_force_min(const CoveringProblem& problem);

/// Every clause hit and every forced variable present.
bool check(const CoveringProblem& problem, const Model& model);

/// No two true variables violate the exclusion rule.
bool respects_exclusions(const CoveringProblem& problem, const Model& model);

/// Strict "better than" under the model ordering.
bool better(const CoveringProblem& problem, const Model& a, const Model& b);

Weight cost_of(const CoveringProblem& problem, const std::vector<Var>& vars);

/// Text dump: `p cover <vars> <clauses>`, then `c <id> <name>`, `w <id> <w>`
/// for non-unit weights, `l <id> <dep> <artifact>` labels, and one clause per
/// line terminated by 0. Ids are 1-based.
std::string dump(const CoveringProblem& problem, const std::vector<std::string>& names = {});

struct ParsedDump {
  CoveringProblem problem;
  std::vector<std::string> names;
};
ParsedDump parse_dump(std::string_view text);

}  // namespace fqnres::solver
