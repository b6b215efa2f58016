#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "fqnres/error.hpp"
#include "fqnres/frontend/sketcher.hpp"
#include "fqnres/report.hpp"
#include "fqnres/resolver.hpp"
#include "oracle.hpp"

using namespace fqnres;
using namespace fqnres::resolver;

namespace {

KbEntry entry(const std::string& line, const DependencyCoordinate& dep = fixtures::kJdk) {
  return KbEntry::parse_listing(line, dep);
}

std::vector<Sketch> sketches(std::initializer_list<const char*> renders) {
  std::vector<Sketch> out;
  for (auto r : renders) out.push_back(Sketch::parse(r));
  return out;
}

}  // namespace

TEST_CASE("matches") {
  CHECK(matches(Sketch::parse("?.Pattern"), entry("T java.util.regex.Pattern")));
  CHECK(matches(Sketch::parse("?.compile(java.lang.String)?"),
                entry("M java.util.regex.Pattern.compile(java.lang.String)java.util.regex.Pattern")));
  CHECK_FALSE(matches(Sketch::parse("?.compile(java.lang.String)?"),
                      entry("M java.util.regex.Pattern.compile(java.lang.String,int)java.util.regex.Pattern")));
  CHECK_FALSE(matches(Sketch::parse("java.util.Pattern"), entry("T java.util.regex.Pattern")));
  CHECK_FALSE(matches(Sketch::parse("?.Pattern"), entry("M a.B.Pattern()void")));
  CHECK(matches(Sketch::parse("?.f(?,int)void"), entry("M a.B.f(x.Y,int)void")));
  CHECK_FALSE(matches(Sketch::parse("?.f(?,int)int"), entry("M a.B.f(x.Y,int)void")));
  CHECK(matches(Sketch::parse("a.B.x:?"), entry("F a.B.x:int")));
  CHECK_FALSE(matches(Sketch::parse("a.C.x:?"), entry("F a.B.x:int")));
  CHECK(matches(Sketch::parse("Top"), entry("T Top")));

  // Agrees with the reference matcher on every fixture pair.
  auto kb = fixtures::walkthrough_kb();
  for (auto s : sketches({"?.Pattern", "java.lang.String", "?.compile(?)?", "?.compile(?,?)?",
                          "?.matcher(java.lang.String)?", "?.find()boolean", "?.CASE_INSENSITIVE:?",
                          "java.util.regex.Pattern.compile(java.lang.String)?"}))
    for (const auto& e : kb.entries()) CHECK(matches(s, e) == oracle::matches(s, e));
}

TEST_CASE("build_problem") {
  auto kb = fixtures::walkthrough_kb();

  SUBCASE("shared dependency:type pair is one variable") {
    auto t = build_problem(sketches({"?.Pattern", "?.compile(java.lang.String)?"}), kb, {});
    REQUIRE(t.problem.clauses.size() == 2);
    std::string key = "jdk:java8:8:java.util.regex.Pattern";
    auto names = t.variable_names();
    auto v = static_cast<solver::Var>(std::find(names.begin(), names.end(), key) - names.begin());
    REQUIRE(v < names.size());
    for (const auto& c : t.problem.clauses) CHECK(std::count(c.begin(), c.end(), v) == 1);
    CHECK(t.problem.clauses[1] == std::vector<solver::Var>{v});
  }
  SUBCASE("variables are numbered in sorted key order") {
    auto t = build_problem(sketches({"?.Pattern", "?.Matcher", "java.lang.String"}), kb, {});
    auto names = t.variable_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (std::size_t i = 0; i < t.candidates.size(); ++i) CHECK(t.candidates[i].variable_id == i);
  }
  SUBCASE("one sketch with one candidate is forced") {
    auto t = build_problem(sketches({"?.find()?"}), kb, {});
    REQUIRE(t.problem.clauses.size() == 1);
    CHECK(t.problem.clauses[0].size() == 1);
    CHECK(solver::preprocess(t.problem).forced == t.problem.clauses[0]);
  }
  SUBCASE("declared dependencies weigh nothing") {
    auto t = build_problem(sketches({"?.Pattern"}), kb, {fixtures::kJdk});
    auto dump = solver::dump(t.problem, t.variable_names());
    for (const auto& c : t.candidates) {
      auto w = "w " + std::to_string(c.variable_id + 1) + " 0\n";
      CHECK((dump.find(w) != std::string::npos) == (c.dependency == fixtures::kJdk));
    }
  }
  SUBCASE("sketches without candidates leave the CNF") {
    auto t = build_problem(sketches({"?.Pattern", "?.Nope", "com.acme.Thing"}), kb, {});
    CHECK(t.problem.clauses.size() == 1);
    CHECK(t.unresolved == std::vector<std::size_t>{1});
    CHECK(t.assumed_builtin == std::vector<std::size_t>{2});
  }
  SUBCASE("nothing coverable") {
    CHECK_THROWS_WITH_AS(build_problem(sketches({"?.Nope"}), kb, {}),
                         "knowledge base cannot cover any sketch", ResolutionError);
  }
  SUBCASE("strict mode names the missing sketches") {
    Options strict;
    strict.strict = true;
    try {
      build_problem(sketches({"?.Pattern", "com.acme.Thing"}), kb, {}, strict);
      FAIL("expected ResolutionError");
    } catch (const ResolutionError& e) {
      CHECK(std::string(e.what()).find("com.acme.Thing") != std::string::npos);
    }
  }
}

TEST_CASE("resolve the walkthrough") {
  auto kb = fixtures::walkthrough_kb();
  auto source = fixtures::read("walkthrough.java");
  auto r = resolve(source, kb, {});

  CHECK(r.dependencies == DependencySet{fixtures::kJdk});
  CHECK(r.imports.contains("java.util.regex.Pattern"));
  CHECK(r.imports.contains("java.util.regex.Matcher"));
  CHECK(r.objective_cost == 3);
  CHECK(r.unresolved.empty());
  CHECK(r.warnings.empty());
  for (const auto& [i, b] : r.bindings) {
    CHECK(b.entry.fqn().find("xalan") == std::string::npos);
    CHECK(b.entry.dependency != fixtures::kPatterns);
  }
  REQUIRE(r.sketches[0].render() == "java.lang.String");
  CHECK(r.bindings.at(0).entry.fqn() == "java.lang.String");
  CHECK(oracle::violations(r).empty());
  CHECK(r.cnf_dump.starts_with("p cover 5 6\n"));
}

TEST_CASE("resolve examples") {
  auto kb = fixtures::walkthrough_kb();

  SUBCASE("only java.lang types with the JDK declared costs nothing") {
    auto r = resolve("String s = \"x\"; Object o = s;", kb, {fixtures::kJdk});
    CHECK(r.objective_cost == 0);
    CHECK(r.dependencies == DependencySet{fixtures::kJdk});
  }
  SUBCASE("strict mode rejects an unknown type") {
    Options strict;
    strict.strict = true;
    CHECK_THROWS_AS(resolve("Pattern p = null; Widget w = null;", kb, {}, strict), ResolutionError);
  }
  SUBCASE("non-strict mode reports holes it cannot match") {
    auto r = resolve("Pattern p = null; Widget w = null;", kb, {});
    REQUIRE(r.unresolved.size() == 1);
    CHECK(r.sketches[r.unresolved[0]].render() == "?.Widget");
    CHECK(r.status(r.unresolved[0]) == Resolution::SketchStatus::Unresolved);
  }
  SUBCASE("hole-free unknown types are assumed built in") {
    auto r = resolve("Pattern p = null; Integer i = null;", kb, {});
    CHECK(r.unresolved.empty());
    REQUIRE(r.assumed_builtin.size() == 1);
    CHECK(r.sketches[r.assumed_builtin[0]].render() == "java.lang.Integer");
  }
  SUBCASE("syntax errors propagate") {
    CHECK_THROWS_AS(resolve("Pattern p = ;", kb, {}), SyntaxError);
    CHECK_THROWS_AS(resolve("int x = y;", kb, {}), AnalysisError);
  }
  SUBCASE("declaring the distractor switches Pattern to it") {
    auto r = resolve("Pattern p = null;", kb, {fixtures::kPatterns});
    CHECK(r.objective_cost == 0);
    CHECK(r.dependencies == DependencySet{fixtures::kPatterns});
    CHECK(r.imports == std::set<std::string>{"org.example.patterns.Pattern"});
  }
}

TEST_CASE("ambiguities are reported") {
  kb::KnowledgeBase kb;
  kb.ingest_class_listing_text("T a.Thing\nM a.Thing.go(int)void\nM a.Thing.go(long)void\n",
                               fixtures::kJdk);
  auto r = resolve_sketches(sketches({"?.go(?)?"}), kb, {});
  REQUIRE(r.ambiguities.size() == 1);
  CHECK(r.ambiguities[0].chosen == "jdk:java8:8:a.Thing a.Thing.go(int)void");
  CHECK(r.ambiguities[0].alternatives == std::vector<std::string>{"jdk:java8:8:a.Thing a.Thing.go(long)void"});
  CHECK(r.bindings.at(0).entry.param_types == std::vector<std::string>{"int"});
}

TEST_CASE("version exclusion") {
  kb::KnowledgeBase kb;
  auto v1 = DependencyCoordinate::parse("g:lib:1.0");
  auto v2 = DependencyCoordinate::parse("g:lib:2.0");
  kb.ingest_class_listing_text("T p.Old\nT p.Both\n", v1);
  kb.ingest_class_listing_text("T p.New\nT p.Both\n", v2);

  SUBCASE("picks one version when possible") {
    auto r = resolve_sketches(sketches({"?.Old", "?.Both"}), kb, {});
    CHECK(r.dependencies == DependencySet{v1});
    CHECK(r.warnings.empty());
  }
  SUBCASE("relaxes with a warning when impossible") {
    auto r = resolve_sketches(sketches({"?.Old", "?.New"}), kb, {});
    CHECK(r.dependencies == DependencySet{v1, v2});
    CHECK(r.warnings.size() == 1);
    CHECK(oracle::violations(r).empty());
  }
  SUBCASE("can be switched off") {
    Options loose;
    loose.exclusive_versions = false;
    auto r = resolve_sketches(sketches({"?.Old", "?.New"}), kb, {}, loose);
    CHECK(r.warnings.empty());
    CHECK(r.dependencies.size() == 2);
  }
}

TEST_CASE("emit_patch") {
  auto kb = fixtures::walkthrough_kb();

  SUBCASE("one import is prepended, body untouched") {
    std::string src = "Matcher m = null;\n";
    auto r = resolve(src, kb, {});
    auto out = emit_patch(r, src);
    CHECK(out == "import java.util.regex.Matcher;\n" + src);
  }
  SUBCASE("nothing to import is the identity") {
    std::string src = "String s = \"x\";\n";
    auto r = resolve(src, kb, {});
    CHECK(emit_patch(r, src) == src);
  }
  SUBCASE("imports are sorted, java.lang skipped, header respected") {
    std::string src = "package demo;\n\nimport java.util.List;\n" + fixtures::read("walkthrough.java");
    auto r = resolve(src, kb, {});
    auto out = emit_patch(r, src);
    CHECK(patch_imports(r, src) ==
          std::vector<std::string>{"java.util.regex.Matcher", "java.util.regex.Pattern"});
    CHECK(out == "package demo;\n\nimport java.util.List;\n"
                 "import java.util.regex.Matcher;\nimport java.util.regex.Pattern;\n" +
                     fixtures::read("walkthrough.java"));
  }
  SUBCASE("existing imports are not repeated") {
    std::string src = "import java.util.regex.*;\nMatcher m = null;\n";
    auto r = resolve(src, kb, {});
    CHECK(emit_patch(r, src) == src);
  }
  SUBCASE("a lone Pattern takes the smallest candidate") {
    // Nothing in the snippet pins the owner, so the tie-break decides.
    auto r = resolve("Pattern p = null;", kb, {});
    CHECK(r.imports == std::set<std::string>{"com.sun.org.apache.xalan.in.xsltc.compiler.Pattern"});
    CHECK(r.ambiguities.empty());
  }
  SUBCASE("patched source resolves every type by import") {
    auto src = fixtures::read("walkthrough.java");
    auto out = emit_patch(resolve(src, kb, {}), src);
    for (const auto& s : frontend::sketch_source(out))
      if (s.kind == EntryKind::Type) CHECK_FALSE(s.has_holes());
  }
}

TEST_CASE("resolver invariants on random KB variants") {
  std::mt19937 rng(31337);
  auto source = fixtures::read("walkthrough.java");
  auto snippet_sketches = frontend::sketch_source(source);
  for (int round = 0; round < 60; ++round) {
    auto variant = oracle::random_variant(rng);
    CAPTURE(variant.kb.dump());
    auto r = resolve_sketches(snippet_sketches, variant.kb, variant.declared);
    CHECK(oracle::violations(r) == "");
    CHECK(r.objective_cost == oracle::bound_cost(r, variant.declared));

    auto best = oracle::optimum(snippet_sketches, variant.kb, variant.declared, true);
    REQUIRE(best);
    CHECK(r.objective_cost == best->cost);
    CHECK(r.warnings.empty() == !best->exclusion_relaxed);

    auto undeclared = resolve_sketches(snippet_sketches, variant.kb, {});
    CHECK(r.objective_cost <= undeclared.objective_cost);

    // Determinism, including the report text.
    auto again = resolve_sketches(snippet_sketches, variant.kb, variant.declared);
    CHECK(report::machine(again) == report::machine(r));
    CHECK(again.cnf_dump == r.cnf_dump);
  }
}
