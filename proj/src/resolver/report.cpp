#include "fqnres/report.hpp"

#include <algorithm>
#include <sstream>

namespace fqnres::report {

using resolver::Resolution;

std::string_view status_name(Resolution::SketchStatus status) {
  switch (status) {
    case Resolution::SketchStatus::Bound: return "bound";
    case Resolution::SketchStatus::Unresolved: return "unresolved";
    case Resolution::SketchStatus::AssumedBuiltin: return "assumed-builtin";
  }
  return "unresolved";
}

nlohmann::ordered_json to_json(const Resolution& r) {
  using json = nlohmann::ordered_json;
  json out;
  out["schema_version"] = kSchemaVersion;

  json sketches = json::array();
  for (std::size_t i = 0; i < r.sketches.size(); ++i) {
    const auto& s = r.sketches[i];
    json occ = json::array();
    for (const auto& span : s.occurrences) occ.push_back(span.str());
    sketches.push_back({{"index", i},
                        {"render", s.render()},
                        {"kind", std::string(kind_name(s.kind))},
                        {"holes", s.has_holes()},
                        {"status", std::string(status_name(r.status(i)))},
                        {"occurrences", std::move(occ)}});
  }
  out["sketches"] = std::move(sketches);

  json bindings = json::array();
  for (const auto& [i, b] : r.bindings)
    bindings.push_back({{"sketch", i},
                        {"render", r.sketches[i].render()},
                        {"fqn", b.entry.fqn()},
                        {"dependency", b.entry.dependency.render()},
                        {"variable", b.variable_key}});
  out["bindings"] = std::move(bindings);

  json deps = json::array();
  for (const auto& d : r.dependencies) deps.push_back(d.render());
  out["dependencies"] = std::move(deps);
  out["imports"] = r.imports;
  out["cost"] = r.objective_cost;

  json ambiguities = json::array();
  for (const auto& a : r.ambiguities)
    ambiguities.push_back({{"sketch", a.sketch},
                           {"render", r.sketches[a.sketch].render()},
                           {"chosen", a.chosen},
                           {"alternatives", a.alternatives}});
  out["ambiguities"] = std::move(ambiguities);

  json unresolved = json::array();
  for (auto i : r.unresolved)
    unresolved.push_back({{"sketch", i}, {"render", r.sketches[i].render()}});
  out["unresolved"] = std::move(unresolved);
  out["warnings"] = r.warnings;
  return out;
}

std::string machine(const Resolution& r) { return to_json(r).dump(2) + "\n"; }

std::string human(const Resolution& r) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& s : r.sketches) width = std::max(width, s.render().size());

  out << "sketches:\n";
  for (std::size_t i = 0; i < r.sketches.size(); ++i) {
    const auto& s = r.sketches[i];
    auto render = s.render();
    out << "  " << (s.has_holes() ? 'U' : 'R') << ' ' << render
        << std::string(width - render.size() + 2, ' ');
    if (auto it = r.bindings.find(i); it != r.bindings.end())
      out << "-> " << it->second.entry.fqn() << "  [" << it->second.entry.dependency.render() << "]";
    else
      out << "-- " << status_name(r.status(i));
    out << '\n';
  }
  out << "dependencies:\n";
  for (const auto& d : r.dependencies) out << "  " << d.render() << '\n';
  out << "imports:\n";
  for (const auto& i : r.imports) out << "  " << i << '\n';
  out << "cost: " << r.objective_cost << '\n';
  for (const auto& a : r.ambiguities) {
    out << "ambiguous: " << r.sketches[a.sketch].render() << " chose " << a.chosen << " over";
    for (const auto& alt : a.alternatives) out << ' ' << alt;
    out << '\n';
  }
  return out.str();
}

}  // namespace fqnres::report
