// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "fqnres/cli.hpp"
#include "fqnres/frontend/sketcher.hpp"
#include "fqnres/report.hpp"
#include "fqnres/resolver.hpp"
#include "fqnres/solver.hpp"
#include "oracle.hpp"

using namespace fqnres;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report_line(int id, const std::string& title, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (!o.pass) ++failures;
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  ["
       << o.detail << "; " << static_cast<long>(ms) << " ms]";
  std::cout << line.str() << std::endl;
}

std::string cover_text(const std::string& source, const SourceSpan& span) {
  return source.substr(span.first.offset, span.last.offset - span.first.offset + 1);
}

struct Cli {
  int code;
  std::string out, err;
};

Cli run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

// 1,000 monotone CNFs: up to 15 variables, up to 10 clauses of 1-5 distinct
// variables, unit weights.
std::vector<solver::CoveringProblem> random_cnfs() {
  std::mt19937 rng(20240601);
  std::vector<solver::CoveringProblem> out;
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 1 + rng() % 15;
    std::size_t m = rng() % 11;
    std::vector<std::vector<solver::Var>> clauses;
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<solver::Var> vars(n);
      std::iota(vars.begin(), vars.end(), 0);
      std::shuffle(vars.begin(), vars.end(), rng);
      vars.resize(std::min<std::size_t>(n, 1 + rng() % 5));
      clauses.push_back(std::move(vars));
    }
    out.push_back(solver::CoveringProblem::make(n, std::move(clauses)));
  }
  return out;
}

}  // namespace

int main() {
  const auto source = fixtures::read("walkthrough.java");
  const auto cnfs = random_cnfs();

  report_line(1, "walkthrough reproduction", [&]() -> Outcome {
    auto start = Clock::now();
    auto kb = fixtures::walkthrough_kb();
    auto r = resolver::resolve(source, kb, {});
    auto secs = std::chrono::duration<double>(Clock::now() - start).count();

    bool one_dep = r.dependencies == resolver::DependencySet{fixtures::kJdk};
    bool imports = r.imports.contains("java.util.regex.Pattern") &&
                   r.imports.contains("java.util.regex.Matcher");
    bool no_distractor = std::none_of(r.bindings.begin(), r.bindings.end(), [](const auto& b) {
      return b.second.entry.dependency == fixtures::kPatterns ||
             b.second.entry.fqn().find("xalan") != std::string::npos;
    });
    // input and regex: every occurrence sits in the resolved String sketch.
    std::size_t params = 0;
    bool strings = false;
    for (std::size_t i = 0; i < r.sketches.size(); ++i) {
      if (r.sketches[i].render() != "java.lang.String") continue;
      strings = !r.sketches[i].has_holes() && r.bindings.contains(i) &&
                r.bindings.at(i).entry.fqn() == "java.lang.String";
      for (const auto& span : r.sketches[i].occurrences) {
        auto t = cover_text(source, span);
        params += t == "input" || t == "regex";
      }
    }
    bool ok = one_dep && imports && no_distractor && strings && params == 4 && secs < 1.0;
    std::ostringstream d;
    d << "deps=" << r.dependencies.size() << " first=" << r.dependencies.begin()->render()
      << " imports_ok=" << imports << " distractor_free=" << no_distractor
      << " input/regex_as_String=" << params << "/4 time=" << secs << "s";
    return {ok, d.str()};
  });

  report_line(2, "solver oracle equivalence (1000 random CNFs)", [&]() -> Outcome {
    auto start = Clock::now();
    std::size_t cost_eq = 0, model_eq = 0;
    for (const auto& p : cnfs) {
      auto a = solver::solve_min(p);
      auto b = solver::brute_force_min(p);
      cost_eq += a.cost == b.cost;
      model_eq += a == b;
    }
    auto secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream d;
    d << "cost equal " << cost_eq << "/1000, models equal " << model_eq << "/1000, time=" << secs << "s";
    return {cost_eq == 1000 && model_eq == 1000 && secs < 30.0, d.str()};
  });

  report_line(3, "preprocessing soundness", [&]() -> Outcome {
    std::size_t same = 0;
    for (const auto& p : cnfs) {
      auto with = solver::solve_min(p, {.preprocess = true});
      auto without = solver::solve_min(p, {.preprocess = false});
      auto reduced = solver::solve_min(solver::preprocess(p), {.preprocess = false});
      same += with == without && with == reduced;
    }
    return {same == 1000, "identical models and costs " + std::to_string(same) + "/1000"};
  });

  report_line(4, "minimality witness", [&]() -> Outcome {
    std::size_t violations = 0, removals = 0;
    for (const auto& p : cnfs) {
      auto m = solver::solve_min(p);
      if (!solver::check(p, m)) ++violations;
      for (std::size_t k = 0; k < m.true_vars.size(); ++k) {
        auto smaller = m;
        smaller.true_vars.erase(smaller.true_vars.begin() + static_cast<std::ptrdiff_t>(k));
        ++removals;
        if (solver::check(p, smaller)) ++violations;
      }
    }
    return {violations == 0, std::to_string(violations) + " violations over " +
                                 std::to_string(removals) + " single-variable removals"};
  });

  report_line(5, "sketch output on the fixture", [&]() -> Outcome {
    auto r = run_cli({"sketch", fixtures::path("walkthrough.java")});
    std::vector<std::string> lines;
    std::istringstream in(r.out);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    std::vector<std::string> expected = {"R java.lang.String",          "U ?.Pattern",
                                         "U ?.compile(java.lang.String)?", "U ?.Matcher",
                                         "U ?.matcher(java.lang.String)?", "U ?.find()?"};
    auto got = lines, want = expected;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    bool ok = r.code == 0 && got == want;
    return {ok, "exit " + std::to_string(r.code) + ", " + std::to_string(lines.size()) +
                    " lines, exact set match=" + (got == want ? "yes" : "no")};
  });

  report_line(6, "determinism of resolve", [&]() -> Outcome {
    fixtures::TempPath dir("acceptance_det");
    std::filesystem::create_directories(dir.path());
    auto kb = (dir.path() / "kb.db").string();
    fixtures::walkthrough_kb().save(kb);
    std::vector<std::string> reports, cnfs_out, patches;
    for (int run = 0; run < 2; ++run) {
      auto cnf = dir.path() / ("run" + std::to_string(run) + ".cnf");
      auto patch = dir.path() / ("run" + std::to_string(run) + ".java");
      auto r = run_cli({"resolve", "--kb", kb, "--output", "machine", "--emit-cnf", cnf.string(),
                    "--patch", patch.string(), fixtures::path("walkthrough.java")});
      if (r.code != 0) return {false, "exit " + std::to_string(r.code) + ": " + r.err};
      reports.push_back(r.out);
      cnfs_out.push_back(slurp(cnf));
      patches.push_back(slurp(patch));
    }
    bool ok = reports[0] == reports[1] && cnfs_out[0] == cnfs_out[1] && patches[0] == patches[1] &&
              !reports[0].empty() && cnfs_out[0].starts_with("p cover");
    std::ostringstream d;
    d << "report " << reports[0].size() << "B same=" << (reports[0] == reports[1]) << ", cnf same="
      << (cnfs_out[0] == cnfs_out[1]) << ", patch same=" << (patches[0] == patches[1]);
    return {ok, d.str()};
  });

  report_line(7, "KB round-trip and idempotence", [&]() -> Outcome {
    fixtures::TempPath file("acceptance_kb");
    auto kb = fixtures::walkthrough_kb();
    kb.ingest_class_listing_text("T org.example.patterns.Pattern\n",
                                 DependencyCoordinate::parse("org.example:patterns:0.9"));
    kb.ingest_pom(fixtures::dir() / "app.pom.xml");
    kb.ingest_ground_truth(fixtures::dir() / "ground_truth.txt");
    kb.ingest_ground_truth_text("org.example:patterns:1.2 ->\n");
    kb.save(file.path());
    auto loaded = kb::KnowledgeBase::load(file.path());

    std::vector<Sketch> probes = frontend::sketch_source(source);
    for (const auto& e : kb.entries()) {
      Sketch s;
      s.kind = e.kind;
      s.simple_name = e.simple_name;
      s.param_types.assign(e.param_types.size(), "?");
      probes.push_back(s);
    }
    std::size_t same = 0;
    for (const auto& s : probes) {
      auto a = kb.lookup(s), b = loaded.lookup(s);
      bool eq = a.size() == b.size();
      for (std::size_t i = 0; eq && i < a.size(); ++i)
        eq = a[i].variable_key == b[i].variable_key &&
             a[i].entry->listing_line() == b[i].entry->listing_line();
      same += eq;
    }
    auto readded = loaded.ingest_class_listing(fixtures::dir() / "jdk8.classes", fixtures::kJdk) +
                   loaded.ingest_class_listing(fixtures::dir() / "patterns.classes", fixtures::kPatterns);
    auto first = loaded.filter_against_ground_truth();
    auto second = loaded.filter_against_ground_truth();
    bool ok = same == probes.size() && readded == 0 && first == 1 && second == 0;
    std::ostringstream d;
    d << "lookups identical " << same << "/" << probes.size() << ", re-ingest added " << readded
      << ", filter removed " << first << " then " << second;
    return {ok, d.str()};
  });

  report_line(8, "declared-dependency preference (100 variants)", [&]() -> Outcome {
    auto kb = fixtures::walkthrough_kb();
    auto sketches = frontend::sketch_source(source);
    auto base = resolver::resolve_sketches(sketches, kb, {});
    auto declared = resolver::resolve_sketches(sketches, kb, {fixtures::kPatterns});
    bool fixture_ok = declared.objective_cost <= base.objective_cost;

    std::mt19937 rng(8);
    std::size_t held = 0;
    std::string first_failure;
    for (int i = 0; i < 100; ++i) {
      auto v = oracle::random_variant(rng);
      auto with = resolver::resolve_sketches(sketches, v.kb, v.declared);
      auto without = resolver::resolve_sketches(sketches, v.kb, {});
      auto best = oracle::optimum(sketches, v.kb, v.declared, true);
      bool ok = best && with.objective_cost == best->cost &&
                with.objective_cost <= without.objective_cost && oracle::violations(with).empty();
      // If some optimum uses declared dependencies only, so must the answer.
      if (ok) {
        bool declared_only_exists = std::any_of(
            best->argmins.begin(), best->argmins.end(), [&](const std::set<oracle::Pair>& s) {
              return std::all_of(s.begin(), s.end(),
                                 [&](const oracle::Pair& p) { return v.declared.contains(p.dep); });
            });
        bool answer_declared_only =
            std::all_of(with.dependencies.begin(), with.dependencies.end(),
                        [&](const DependencyCoordinate& d) { return v.declared.contains(d); });
        ok = !declared_only_exists || answer_declared_only;
      }
      held += ok;
      if (!ok && first_failure.empty()) first_failure = " first failure at variant " + std::to_string(i);
    }
    std::ostringstream d;
    d << "fixture cost " << declared.objective_cost << " <= " << base.objective_cost
      << ", invariant held " << held << "/100" << first_failure;
    return {fixture_ok && held == 100, d.str()};
  });

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criterion(s) failed"
                         : std::string("acceptance: all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
