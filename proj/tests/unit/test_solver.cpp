#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "fqnres/solver.hpp"

using namespace fqnres;
using namespace fqnres::solver;

namespace {

// Examples are written with 1-based ids as in DIMACS.
CoveringProblem one_based(std::size_t n, std::vector<std::vector<Var>> clauses,
                          std::vector<Weight> weights = {}) {
  for (auto& c : clauses)
    for (auto& v : c) --v;
  return CoveringProblem::make(n, std::move(clauses), std::move(weights));
}

std::vector<Var> one_based_vars(const std::vector<Var>& vars) {
  std::vector<Var> out;
  for (auto v : vars) out.push_back(v + 1);
  return out;
}

CoveringProblem random_problem(std::mt19937& rng, std::size_t max_vars, std::size_t max_clauses,
                               bool weighted = false, bool labelled = false) {
  std::size_t n = 1 + rng() % max_vars;
  std::size_t m = rng() % (max_clauses + 1);
  std::vector<std::vector<Var>> clauses;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t size = 1 + rng() % std::min<std::size_t>(5, n);
    std::vector<Var> c;
    for (std::size_t j = 0; j < size; ++j) c.push_back(static_cast<Var>(rng() % n));
    clauses.push_back(std::move(c));
  }
  std::vector<Weight> weights;
  if (weighted)
    for (std::size_t v = 0; v < n; ++v) weights.push_back(rng() % 3);
  auto p = CoveringProblem::make(n, std::move(clauses), std::move(weights));
  if (labelled) {
    for (std::size_t v = 0; v < n; ++v) {
      int dep = static_cast<int>(rng() % 4);
      p.dependency_of.push_back(dep);
      p.artifact_of.push_back(dep / 2);  // deps {0,1} and {2,3} are versions of one artifact
    }
  }
  return p;
}

// Independent reference: enumerate every subset and keep the least one under
// (cost, distinct dependency labels, cardinality, sorted ids).
std::optional<Model> reference_min(const CoveringProblem& p) {
  using Key = std::tuple<Weight, std::size_t, std::size_t, std::vector<Var>>;
  std::optional<Key> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.num_vars); ++mask) {
    std::vector<Var> vars;
    for (Var v = 0; v < p.num_vars; ++v)
      if (mask >> v & 1) vars.push_back(v);
    bool ok = std::all_of(p.clauses.begin(), p.clauses.end(), [&](const auto& c) {
      return std::any_of(c.begin(), c.end(), [&](Var v) { return mask >> v & 1; });
    });
    ok = ok && std::all_of(p.forced.begin(), p.forced.end(), [&](Var v) { return mask >> v & 1; });
    for (std::size_t i = 0; ok && i < vars.size(); ++i)
      for (std::size_t j = i + 1; ok && j < vars.size(); ++j) {
        auto a = vars[i], b = vars[j];
        if (!p.artifact_of.empty() && p.artifact_of[a] >= 0 && p.artifact_of[a] == p.artifact_of[b] &&
            p.dependency_of[a] != p.dependency_of[b])
          ok = false;
      }
    if (!ok) continue;
    Weight cost = 0;
    std::set<int> deps;
    for (auto v : vars) {
      cost += p.weights.empty() ? 1 : p.weights[v];
      if (!p.dependency_of.empty() && p.dependency_of[v] >= 0) deps.insert(p.dependency_of[v]);
    }
    Key key{cost, deps.size(), vars.size(), vars};
    if (!best || key < *best) best = key;
  }
  if (!best) return std::nullopt;
  return Model{std::get<3>(*best), std::get<0>(*best)};
}

}  // namespace

TEST_CASE("construction rejects invalid problems") {
  CHECK_THROWS_AS(CoveringProblem::make(2, {{0}, {}}), Error);
  CHECK_THROWS_AS(CoveringProblem::make(2, {{2}}), Error);
  CHECK_THROWS_AS(CoveringProblem::make(2, {{0}}, {1}), Error);
  auto p = CoveringProblem::make(3, {{2, 0, 2}, {1}});
  CHECK(p.clauses == std::vector<std::vector<Var>>{{0, 2}, {1}});
}

TEST_CASE("preprocess") {
  SUBCASE("unit propagates and removes satisfied clauses") {
    auto r = preprocess(one_based(3, {{1}, {1, 2}, {2, 3}}));
    CHECK(one_based_vars(r.forced) == std::vector<Var>{1});
    REQUIRE(r.clauses.size() == 1);
    CHECK(one_based_vars(r.clauses[0]) == std::vector<Var>{2, 3});
  }
  SUBCASE("independent units") {
    auto r = preprocess(one_based(2, {{1}, {2}}));
    CHECK(one_based_vars(r.forced) == std::vector<Var>{1, 2});
    CHECK(r.clauses.empty());
  }
  SUBCASE("no units leaves the problem unchanged") {
    auto p = one_based(3, {{1, 2}, {2, 3}});
    auto r = preprocess(p);
    CHECK(r.forced.empty());
    CHECK(r.clauses == p.clauses);
  }
  SUBCASE("forced weights still count") {
    auto p = one_based(2, {{1}, {1, 2}}, {4, 1});
    CHECK(solve_min(p).cost == 4);
    CHECK(solve_min(preprocess(p)).cost == 4);
  }
}

TEST_CASE("solve_min and brute_force_min examples") {
  auto p = one_based(3, {{1, 2}, {2, 3}});
  CHECK(one_based_vars(solve_min(p).true_vars) == std::vector<Var>{2});
  CHECK(solve_min(p).cost == 1);
  CHECK(one_based_vars(brute_force_min(p).true_vars) == std::vector<Var>{2});

  CHECK(one_based_vars(solve_min(one_based(1, {{1}})).true_vars) == std::vector<Var>{1});
  CHECK(one_based_vars(brute_force_min(one_based(1, {{1}})).true_vars) == std::vector<Var>{1});

  auto w = one_based(4, {{1, 2}, {3, 4}}, {5, 1, 1, 5});
  CHECK(one_based_vars(solve_min(w).true_vars) == std::vector<Var>{2, 3});
  CHECK(solve_min(w).cost == 2);

  auto none = CoveringProblem::make(3, {});
  CHECK(brute_force_min(none) == Model{{}, 0});
  CHECK(solve_min(none) == Model{{}, 0});

  CHECK_THROWS_AS(brute_force_min(CoveringProblem::make(kBruteForceMaxVars + 1, {})), Error);
}

TEST_CASE("check") {
  auto p = one_based(3, {{1, 2}});
  CHECK(check(p, Model{{1}, 1}));
  CHECK_FALSE(check(p, Model{{}, 0}));
  auto q = one_based(3, {{1}, {2, 3}});
  CHECK(check(q, Model{{0, 2}, 2}));
}

TEST_CASE("ties break towards the lexicographically smallest set") {
  auto p = CoveringProblem::make(4, {{0, 1, 2, 3}});
  CHECK(solve_min(p).true_vars == std::vector<Var>{0});
  auto q = CoveringProblem::make(4, {{0, 1}, {2, 3}});
  CHECK(solve_min(q).true_vars == std::vector<Var>{0, 2});
}

TEST_CASE("zero-weight variables are preferred but never redundant") {
  auto p = CoveringProblem::make(3, {{0, 1}, {1, 2}}, {1, 0, 1});
  CHECK(solve_min(p) == Model{{1}, 0});
  auto q = CoveringProblem::make(3, {{0}, {1, 2}}, {0, 0, 0});
  CHECK(solve_min(q) == Model{{0, 1}, 0});
}

TEST_CASE("labels: fewer dependencies win ties and exclusions are respected") {
  auto p = CoveringProblem::make(4, {{0, 2}, {1, 3}});
  p.dependency_of = {0, 1, 2, 2};
  p.artifact_of = {-1, -1, -1, -1};
  CHECK(solve_min(p).true_vars == std::vector<Var>{2, 3});

  auto ex = CoveringProblem::make(3, {{0}, {1, 2}});
  ex.dependency_of = {0, 1, 2};
  ex.artifact_of = {0, 0, 1};
  auto m = solve_min(ex);
  CHECK(m.true_vars == std::vector<Var>{0, 2});
  CHECK(respects_exclusions(ex, m));

  auto unsat = CoveringProblem::make(2, {{0}, {1}});
  unsat.dependency_of = {0, 1};
  unsat.artifact_of = {0, 0};
  CHECK_THROWS_AS(solve_min(unsat), Unsatisfiable);
  CHECK_THROWS_AS(brute_force_min(unsat), Unsatisfiable);
}

TEST_CASE("solvers agree with an independent reference") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 600; ++i) {
    bool weighted = i % 3 == 1, labelled = i % 3 == 2;
    auto p = random_problem(rng, 12, 10, weighted, labelled);
    CAPTURE(dump(p));
    auto expected = reference_min(p);
    if (!expected) {
      CHECK_THROWS_AS(solve_min(p), Unsatisfiable);
      CHECK_THROWS_AS(brute_force_min(p), Unsatisfiable);
      continue;
    }
    CHECK(brute_force_min(p) == *expected);
    CHECK(solve_min(p) == *expected);
    CHECK(solve_min(p, {.preprocess = false}) == *expected);
  }
}

TEST_CASE("solver invariants on random problems") {
  std::mt19937 rng(99);
  for (int i = 0; i < 400; ++i) {
    auto p = random_problem(rng, 15, 10, i % 2 == 0);
    CAPTURE(dump(p));
    auto m = solve_min(p);

    CHECK(check(p, m));
    CHECK(m.cost == cost_of(p, m.true_vars));
    CHECK(std::is_sorted(m.true_vars.begin(), m.true_vars.end()));

    // Minimality witness.
    for (std::size_t k = 0; k < m.true_vars.size(); ++k) {
      auto smaller = m;
      smaller.true_vars.erase(smaller.true_vars.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK_FALSE(check(p, smaller));
    }

    // Preprocessing soundness: solving the reduced problem gives the same model.
    auto reduced = preprocess(p);
    CHECK(solve_min(reduced) == m);
    for (auto v : reduced.forced)
      CHECK(std::binary_search(m.true_vars.begin(), m.true_vars.end(), v));

    // Monotonicity: an extra clause never lowers the optimum.
    auto extra = p;
    std::vector<Var> c{static_cast<Var>(rng() % p.num_vars), static_cast<Var>(rng() % p.num_vars)};
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    extra.clauses.push_back(c);
    CHECK(solve_min(extra).cost >= m.cost);
  }
}

TEST_CASE("larger instances stay exact") {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto p = random_problem(rng, 22, 30);
    CHECK(solve_min(p) == brute_force_min(p));
  }
  // Beyond the brute-force guard the solver still returns a valid model.
  auto big = random_problem(rng, 60, 80);
  big.num_vars = 60;
  CHECK(check(big, solve_min(big)));
}

TEST_CASE("dump round-trip") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto p = random_problem(rng, 10, 8, i % 2 == 0, i % 3 == 0);
    if (i % 4 == 0) p = preprocess(p);
    std::vector<std::string> names;
    for (std::size_t v = 0; v < p.num_vars; ++v) names.push_back("g:a:1:p.T" + std::to_string(v));
    auto text = dump(p, names);
    CHECK(text.starts_with("p cover "));
    auto parsed = parse_dump(text);
    CHECK(parsed.names == names);
    CHECK(dump(parsed.problem, parsed.names) == text);
    auto outcome = [](const CoveringProblem& q) -> std::optional<Model> {
      try {
        return solve_min(q);
      } catch (const Unsatisfiable&) {
        return std::nullopt;
      }
    };
    CHECK(outcome(parsed.problem) == outcome(p));
  }
  CHECK_THROWS_AS(parse_dump("1 2 0\n"), Error);
  CHECK_THROWS_AS(parse_dump("p cover 2 2\n1 2 0\n"), Error);
  CHECK_THROWS_AS(parse_dump("p cover 2 1\n1 3 0\n"), Error);
}

TEST_CASE("weights appear as w lines only when non-unit") {
  auto p = CoveringProblem::make(3, {{0, 1, 2}}, {1, 0, 2});
  auto text = dump(p);
  CHECK(text.find("w 2 0\n") != std::string::npos);
  CHECK(text.find("w 3 2\n") != std::string::npos);
  CHECK(text.find("w 1 ") == std::string::npos);
}
