#include "fqnres/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "fqnres/error.hpp"
#include "fqnres/frontend/sketcher.hpp"
#include "fqnres/knowledge_base.hpp"
#include "fqnres/report.hpp"
#include "fqnres/resolver.hpp"

namespace fqnres::cli {
namespace {

namespace fs = std::filesystem;

struct Input {
  std::string name;
  std::string text;
};

Input read_snippet(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-")
    return {"<stdin>", std::string(std::istreambuf_iterator<char>(in), {})};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(path + ": cannot open snippet");
  return {path, std::string(std::istreambuf_iterator<char>(file), {})};
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(path.string() + ": cannot write");
  file << text;
  if (!file.flush()) throw Error(path.string() + ": write failed");
}

// Frontend errors carry positions but not the file name.
std::string located(const std::string& name, const Error& e) {
  if (dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const AnalysisError*>(&e))
    return name + ":" + e.what();
  return e.what();
}

struct IngestArgs {
  std::string kb;
  std::vector<std::string> poms, classes, deps, ground_truth;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out) {
  if (a.poms.empty() && a.classes.empty() && a.ground_truth.empty())
    throw Error("ingest: nothing to ingest (give --pom, --classes with --dep, or --ground-truth)");
  if (a.classes.size() != a.deps.size())
    throw Error("ingest: every --classes needs a matching --dep");

  auto kb = fs::exists(a.kb) ? kb::KnowledgeBase::load(a.kb) : kb::KnowledgeBase{};
  auto itemsets_before = kb.itemsets().size();
  std::size_t added = 0, relations = 0, removed = 0;
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    added += kb.ingest_class_listing(a.classes[i], DependencyCoordinate::parse(a.deps[i]));
  for (const auto& pom : a.poms) kb.ingest_pom(pom);
  for (const auto& gt : a.ground_truth) relations += kb.ingest_ground_truth(gt);
  if (!kb.ground_truth().empty()) removed = kb.filter_against_ground_truth();
  kb.save(a.kb);

  out << "added=" << added << " removed=" << removed << " entries=" << kb.entries().size()
      << " itemsets=" << kb.itemsets().size() << " new_itemsets="
      << kb.itemsets().size() - std::min(itemsets_before, kb.itemsets().size())
      << " relations=" << relations << '\n';
  return kExitOk;
}

struct SketchArgs {
  std::string snippet;
  bool wrapped = true;
  bool spans = false;
};

int cmd_sketch(const SketchArgs& a, std::istream& in, std::ostream& out) {
  auto input = read_snippet(a.snippet, in);
  try {
    out << frontend::format_sketches(frontend::sketch_source(input.text, a.wrapped), a.spans);
  } catch (const Error& e) {
    throw Error(located(input.name, e));
  }
  return kExitOk;
}

struct ResolveArgs {
  std::string snippet;
  std::string kb;
  bool strict = false;
  bool partial = false;
  bool multiple_versions = false;
  bool wrapped = true;
  std::vector<std::string> declared;
  std::string output = "human";
  std::string patch;
  std::string emit_cnf;
};

int cmd_resolve(const ResolveArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  resolver::DependencySet declared;
  for (const auto& d : a.declared) declared.insert(DependencyCoordinate::parse(d));
  auto kb = kb::KnowledgeBase::load(a.kb);
  auto input = read_snippet(a.snippet, in);

  resolver::Options options;
  options.strict = a.strict;
  options.exclusive_versions = !a.multiple_versions;
  options.allow_wrapping = a.wrapped;

  resolver::Resolution resolution;
  try {
    resolution = resolver::resolve(input.text, kb, declared, options);
  } catch (const Error& e) {
    throw Error(located(input.name, e));
  }

  if (!a.emit_cnf.empty()) write_file(a.emit_cnf, resolution.cnf_dump);
  out << (a.output == "machine" ? report::machine(resolution) : report::human(resolution));
  for (const auto& w : resolution.warnings) err << "warning: " << w << '\n';

  if (!a.patch.empty()) {
    if (!resolution.unresolved.empty() && !a.partial)
      throw Error("resolve: " + std::to_string(resolution.unresolved.size()) +
                  " unresolved sketch(es); pass --partial to write the patch anyway");
    write_file(a.patch, resolver::emit_patch(resolution, input.text));
  }
  if (!resolution.unresolved.empty()) {
    for (auto i : resolution.unresolved)
      err << "unresolved: " << resolution.sketches[i].render() << '\n';
    return kExitUnresolved;
  }
  return kExitOk;
}

int cmd_stats(const std::string& path, std::ostream& out) {
  auto s = kb::KnowledgeBase::load(path).stats();
  out << "types=" << s.types << " methods=" << s.methods << " fields=" << s.fields
      << " dependencies=" << s.dependencies << " itemsets=" << s.itemsets
      << " relations=" << s.relations << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Resolve fully qualified names and dependencies for Java snippets", "fqnres"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Add class listings, POMs and ground truth to a KB");
  ingest_cmd->add_option("--kb", ingest.kb, "KB file (created if missing)")->required();
  ingest_cmd->add_option("--pom", ingest.poms, "Maven POM file")
      ->allow_extra_args(false);
  ingest_cmd->add_option("--classes", ingest.classes, "Class listing file")
      ->allow_extra_args(false);
  ingest_cmd->add_option("--dep", ingest.deps, "Coordinate g:a:v for the matching --classes")
      ->allow_extra_args(false);
  ingest_cmd->add_option("--ground-truth", ingest.ground_truth, "Ground-truth relation file")
      ->allow_extra_args(false);

  SketchArgs sketch;
  auto* sketch_cmd = app.add_subcommand("sketch", "Print the sketches of a snippet");
  sketch_cmd->add_option("snippet", sketch.snippet, "Snippet file (default: stdin)");
  sketch_cmd->add_flag("--wrapped,!--no-wrapped", sketch.wrapped,
                       "Allow wrapping members and statements in a synthetic class");
  sketch_cmd->add_flag("--spans", sketch.spans, "Also print occurrence spans (line:col-line:col)");

  ResolveArgs resolve;
  auto* resolve_cmd = app.add_subcommand("resolve", "Resolve a snippet against a KB");
  resolve_cmd->add_option("snippet", resolve.snippet, "Snippet file (default: stdin)");
  resolve_cmd->add_option("--kb", resolve.kb, "KB file")->required();
  resolve_cmd->add_flag("--strict", resolve.strict, "Fail if any sketch has no candidate");
  resolve_cmd->add_flag("--partial", resolve.partial, "Write --patch even with unresolved sketches");
  resolve_cmd->add_flag("--multiple-versions", resolve.multiple_versions,
                        "Allow several versions of one artifact");
  resolve_cmd->add_flag("--wrapped,!--no-wrapped", resolve.wrapped,
                        "Allow wrapping members and statements in a synthetic class");
  resolve_cmd->add_option("--declared", resolve.declared, "Dependency already declared (g:a:v)")
      ->allow_extra_args(false);
  resolve_cmd->add_option("--output", resolve.output, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));
  resolve_cmd->add_option("--patch", resolve.patch, "Write the snippet with imports added");
  resolve_cmd->add_option("--emit-cnf", resolve.emit_cnf, "Write the covering problem");

  std::string stats_kb;
  auto* stats_cmd = app.add_subcommand("stats", "Print KB counts");
  stats_cmd->add_option("--kb", stats_kb, "KB file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(ingest, out);
    if (*sketch_cmd) return cmd_sketch(sketch, in, out);
    if (*resolve_cmd) return cmd_resolve(resolve, in, out, err);
    if (*stats_cmd) return cmd_stats(stats_kb, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace fqnres::cli
