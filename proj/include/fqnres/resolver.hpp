#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fqnres/coordinate.hpp"
#include "fqnres/kb_entry.hpp"
#include "fqnres/knowledge_base.hpp"
#include "fqnres/matching.hpp"
#include "fqnres/sketch.hpp"
#include "fqnres/solver.hpp"

namespace fqnres::resolver {

using DependencySet = std::set<DependencyCoordinate>;

struct Options {
  /// Every sketch must have a candidate; otherwise hole-free sketches without
  /// candidates are assumed to be JDK built-ins and skipped.
  bool strict = false;
  /// At most one version per (group, artifact) among selected variables.
  bool exclusive_versions = true;
  bool allow_wrapping = true;
};

/// One `dependency:type` pair the solver may select.
struct Candidate {
  solver::Var variable_id = 0;
  std::string variable_key;
  DependencyCoordinate dependency;
  std::string import_type;
  /// Matching entries per covered sketch, sorted by FQN.
  std::map<std::size_t, std::vector<const KbEntry*>> entries;
};

struct ProblemTable {
  solver::CoveringProblem problem;
  std::vector<Candidate> candidates;       // indexed by variable id
  std::vector<std::size_t> clause_sketch;  // sketch index of each clause
  std::vector<std::size_t> unresolved;
  std::vector<std::size_t> assumed_builtin;

  std::vector<std::string> variable_names() const;
};

/// One clause per sketch with candidates. Variables are numbered in sorted
/// variable-key order; declared dependencies cost 0, everything else 1.
/// Throws ResolutionError if no sketch can be covered, or in strict mode if
/// any sketch lacks candidates.
ProblemTable build_problem(const std::vector<Sketch>& sketches, const kb::KnowledgeBase& kb,
                           const DependencySet& declared, const Options& options = {});

struct Binding {
  KbEntry entry;
  std::string variable_key;
};

struct Ambiguity {
  std::size_t sketch = 0;
  std::string chosen;
  std::vector<std::string> alternatives;
};

struct Resolution {
  std::vector<Sketch> sketches;
  std::map<std::size_t, Binding> bindings;
  DependencySet dependencies;
  std::set<std::string> imports;
  std::vector<std::size_t> unresolved;
  std::vector<std::size_t> assumed_builtin;
  std::vector<Ambiguity> ambiguities;
  std::vector<std::string> warnings;
  solver::Weight objective_cost = 0;
  std::string cnf_dump;

  enum class SketchStatus { Bound, Unresolved, AssumedBuiltin };
  SketchStatus status(std::size_t sketch) const;
};

/// Solves an already sketched snippet.
Resolution resolve_sketches(std::vector<Sketch> sketches, const kb::KnowledgeBase& kb,
                            const DependencySet& declared, const Options& options = {});

/// Full pipeline: wrap, parse, infer, sketch, build, solve, bind.
Resolution resolve(std::string_view source, const kb::KnowledgeBase& kb,
                   const DependencySet& declared, const Options& options = {});

/// `source` with `import` lines for the resolution's imports inserted after
/// any package/import header. java.lang types, primitives, and imports the
/// source already has are left out. The rest of the text is unchanged.
std::string emit_patch(const Resolution& resolution, std::string_view source);

/// The imports emit_patch would add, sorted.
std::vector<std::string> patch_imports(const Resolution& resolution, std::string_view source);

}  // namespace fqnres::resolver
