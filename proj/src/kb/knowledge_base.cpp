#include "fqnres/knowledge_base.hpp"

#include <algorithm>
#include <fstream>

#include "fqnres/error.hpp"
#include "fqnres/matching.hpp"
#include "text_util.hpp"

namespace fqnres::kb {

using detail::split_lines;
using detail::trim;

std::string variable_key(const KbEntry& entry) {
  return entry.dependency.render() + ":" + entry.import_type();
}

std::string KnowledgeBase::identity(const KbEntry& entry) {
  std::string id = entry.dependency.render();
  id += ' ';
  id += kind_tag(entry.kind);
  id += entry.fqn();
  return id;
}

bool KnowledgeBase::add_entry(KbEntry entry) {
  entry.validate();
  entry.dependency.validate();
  if (!identities_.insert(identity(entry)).second) return false;
  entries_.push_back(std::move(entry));
  index(entries_.size() - 1);
  return true;
}

void KnowledgeBase::index(std::size_t id) {
  const auto& e = entries_[id];
  switch (e.kind) {
    case EntryKind::Type: by_simple_name_[e.simple_name].push_back(id); break;
    case EntryKind::Method:
      by_method_key_[{e.simple_name, e.param_types.size()}].push_back(id);
      break;
    case EntryKind::Field: by_field_name_[e.simple_name].push_back(id); break;
  }
}

void KnowledgeBase::rebuild_indexes() {
  by_simple_name_.clear();
  by_method_key_.clear();
  by_field_name_.clear();
  identities_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    identities_.insert(identity(entries_[i]));
    index(i);
  }
}

std::size_t KnowledgeBase::ingest_class_listing(const std::filesystem::path& path,
                                                const DependencyCoordinate& dependency) {
  return ingest_class_listing_text(detail::read_file(path), dependency, path.string());
}

std::size_t KnowledgeBase::ingest_class_listing_text(std::string_view text,
                                                     const DependencyCoordinate& dependency,
                                                     const std::string& source_name) {
  dependency.validate();
  // Parse everything first so a bad line leaves the KB untouched.
  std::vector<KbEntry> parsed;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    try {
      parsed.push_back(KbEntry::parse_listing(line, dependency));
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      throw FormatError(source_name, i + 1, e.what());
    }
  }
  std::size_t added = 0;
  for (auto& e : parsed) added += add_entry(std::move(e)) ? 1 : 0;
  return added;
}

void KnowledgeBase::add_itemset(ProjectItemset itemset) {
  auto it = std::find_if(itemsets_.begin(), itemsets_.end(), [&](const ProjectItemset& s) {
    return s.project_id == itemset.project_id;
  });
  if (it != itemsets_.end())
    *it = std::move(itemset);
  else
    itemsets_.push_back(std::move(itemset));
}

std::size_t KnowledgeBase::ingest_ground_truth(const std::filesystem::path& path) {
  return ingest_ground_truth_text(detail::read_file(path), path.string());
}

std::size_t KnowledgeBase::ingest_ground_truth_text(std::string_view text,
                                                    const std::string& source_name) {
  std::vector<std::pair<DependencyCoordinate, std::optional<DependencyCoordinate>>> parsed;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw FormatError(source_name, i + 1, "expected 'group:artifact:version -> ...'");
    try {
      auto key = DependencyCoordinate::parse(trim(line.substr(0, arrow)));
      auto rhs = trim(line.substr(arrow + 2));
      std::optional<DependencyCoordinate> target;
      if (!rhs.empty()) target = DependencyCoordinate::parse(rhs);
      parsed.emplace_back(std::move(key), std::move(target));
    } catch (const Error& e) {
      throw FormatError(source_name, i + 1, e.what());
    }
  }
  std::size_t added = 0;
  for (auto& [key, target] : parsed) {
    auto& targets = ground_truth_[key];
    if (target && targets.insert(*target).second) ++added;
  }
  return added;
}

std::size_t KnowledgeBase::filter_against_ground_truth() {
  if (ground_truth_.empty()) return 0;

  // Versions Maven vouches for, per known artifact.
  std::map<std::pair<std::string, std::string>, std::set<std::string>> known;
  for (const auto& [key, targets] : ground_truth_) known[{key.group, key.artifact}].insert(key.version);
  for (const auto& [key, targets] : ground_truth_)
    for (const auto& t : targets) {
      auto it = known.find({t.group, t.artifact});
      if (it != known.end()) it->second.insert(t.version);
    }

  auto violates = [&](const KbEntry& e) {
    auto it = known.find({e.dependency.group, e.dependency.artifact});
    return it != known.end() && !it->second.contains(e.dependency.version);
  };
  auto before = entries_.size();
  std::erase_if(entries_, violates);
  auto removed = before - entries_.size();
  if (removed) rebuild_indexes();
  return removed;
}

std::vector<LookupHit> KnowledgeBase::lookup(const Sketch& sketch) const {
  const std::vector<std::size_t>* ids = nullptr;
  switch (sketch.kind) {
    case EntryKind::Type: {
      auto it = by_simple_name_.find(sketch.simple_name);
      if (it != by_simple_name_.end()) ids = &it->second;
      break;
    }
    case EntryKind::Method: {
      auto it = by_method_key_.find({sketch.simple_name, sketch.param_types.size()});
      if (it != by_method_key_.end()) ids = &it->second;
      break;
    }
    case EntryKind::Field: {
      auto it = by_field_name_.find(sketch.simple_name);
      if (it != by_field_name_.end()) ids = &it->second;
      break;
    }
  }
  std::vector<LookupHit> hits;
  if (!ids) return hits;
  for (auto id : *ids) {
    const auto& e = entries_[id];
    if (resolver::matches(sketch, e)) hits.push_back({&e, variable_key(e)});
  }
  std::sort(hits.begin(), hits.end(), [](const LookupHit& a, const LookupHit& b) {
    if (a.variable_key != b.variable_key) return a.variable_key < b.variable_key;
    return a.entry->fqn() < b.entry->fqn();
  });
  return hits;
}

std::size_t KnowledgeBase::relation_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [key, targets] : ground_truth_) n += targets.size();
  return n;
}

Stats KnowledgeBase::stats() const {
  Stats s;
  std::set<DependencyCoordinate> deps;
  for (const auto& e : entries_) {
    switch (e.kind) {
      case EntryKind::Type: ++s.types; break;
      case EntryKind::Method: ++s.methods; break;
      case EntryKind::Field: ++s.fields; break;
    }
    deps.insert(e.dependency);
  }
  s.dependencies = deps.size();
  s.itemsets = itemsets_.size();
  s.relations = relation_count();
  return s;
}

bool KnowledgeBase::indexes_consistent() const {
  std::vector<int> seen(entries_.size(), 0);
  auto visit = [&](const auto& index, auto&& key_ok) {
    for (const auto& [key, ids] : index)
      for (auto id : ids) {
        if (id >= entries_.size() || !key_ok(key, entries_[id])) return false;
        ++seen[id];
      }
    return true;
  };
  bool ok = visit(by_simple_name_,
                  [](const std::string& k, const KbEntry& e) {
                    return e.kind == EntryKind::Type && e.simple_name == k;
                  }) &&
            visit(by_method_key_,
                  [](const std::pair<std::string, std::size_t>& k, const KbEntry& e) {
                    return e.kind == EntryKind::Method && e.simple_name == k.first &&
                           e.param_types.size() == k.second;
                  }) &&
            visit(by_field_name_, [](const std::string& k, const KbEntry& e) {
              return e.kind == EntryKind::Field && e.simple_name == k;
            });
  return ok && std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }) &&
         identities_.size() == entries_.size();
}

// Persistence -----------------------------------------------------------------

std::string KnowledgeBase::dump() const {
  std::vector<std::string> entry_lines;
  entry_lines.reserve(entries_.size());
  for (const auto& e : entries_)
    entry_lines.push_back("dep=" + e.dependency.render() + " " + e.listing_line());
  std::sort(entry_lines.begin(), entry_lines.end());

  std::vector<std::string> itemset_lines;
  for (const auto& s : itemsets_) {
    std::string line = "itemset=" + s.project_id;
    for (const auto& d : s.dependencies) line += " " + d.render();
    itemset_lines.push_back(std::move(line));
  }
  std::sort(itemset_lines.begin(), itemset_lines.end());

  std::string out(kDumpHeader);
  out += '\n';
  for (const auto& l : entry_lines) out += l + '\n';
  for (const auto& l : itemset_lines) out += l + '\n';
  std::size_t keys = 0;
  for (const auto& [key, targets] : ground_truth_) {
    if (targets.empty()) {
      out += "gt=" + key.render() + " ->\n";
      ++keys;
    }
    for (const auto& t : targets) out += "gt=" + key.render() + " -> " + t.render() + '\n';
  }
  out += "end entries=" + std::to_string(entries_.size()) +
         " itemsets=" + std::to_string(itemsets_.size()) +
         " relations=" + std::to_string(relation_count()) + " keys=" + std::to_string(keys) + '\n';
  return out;
}

void KnowledgeBase::save(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(path.string() + ": cannot write knowledge base");
    out << dump();
    if (!out.flush()) throw Error(path.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

KnowledgeBase KnowledgeBase::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    throw Error(path.string() + ": knowledge base does not exist");
  return parse_dump(detail::read_file(path), path.string());
}

KnowledgeBase KnowledgeBase::parse_dump(std::string_view text, const std::string& source_name) {
  auto lines = split_lines(text);
  if (lines.empty() || lines.front() != kDumpHeader) {
    auto got = lines.empty() ? std::string("empty file") : "'" + std::string(lines.front()) + "'";
    throw FormatError(source_name, 1,
                      "unsupported knowledge base version: expected '" +
                          std::string(kDumpHeader) + "', got " + got);
  }

  KnowledgeBase kb;
  std::size_t keys = 0;
  bool ended = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto line = lines[i];
    if (line.empty()) continue;
    if (ended) throw FormatError(source_name, i + 1, "data after end marker");
    try {
      if (line.starts_with("dep=")) {
        auto sp = line.find(' ');
        if (sp == std::string_view::npos) throw Error("entry line without record");
        auto dep = DependencyCoordinate::parse(line.substr(4, sp - 4));
        if (!kb.add_entry(KbEntry::parse_listing(line.substr(sp + 1), dep)))
          throw Error("duplicate entry");
      } else if (line.starts_with("itemset=")) {
        auto rest = line.substr(8);
        auto sp = rest.find(' ');
        ProjectItemset s;
        s.project_id = std::string(rest.substr(0, sp));
        while (sp != std::string_view::npos) {
          auto next = rest.find(' ', sp + 1);
          s.dependencies.insert(DependencyCoordinate::parse(
              rest.substr(sp + 1, next == std::string_view::npos ? next : next - sp - 1)));
          sp = next;
        }
        if (s.project_id.empty() || s.dependencies.empty()) throw Error("empty itemset");
        kb.itemsets_.push_back(std::move(s));
      } else if (line.starts_with("gt=")) {
        auto rest = line.substr(3);
        auto arrow = rest.find(" ->");
        if (arrow == std::string_view::npos) throw Error("ground-truth line without '->'");
        auto key = DependencyCoordinate::parse(rest.substr(0, arrow));
        auto rhs = trim(rest.substr(arrow + 3));
        auto& targets = kb.ground_truth_[key];
        if (rhs.empty())
          ++keys;
        else
          targets.insert(DependencyCoordinate::parse(rhs));
      } else if (line.starts_with("end ")) {
        auto expected = "end entries=" + std::to_string(kb.entries_.size()) +
                        " itemsets=" + std::to_string(kb.itemsets_.size()) +
                        " relations=" + std::to_string(kb.relation_count()) +
                        " keys=" + std::to_string(keys);
        if (line != expected)
          throw Error("record counts do not match end marker (truncated or corrupt file)");
        ended = true;
      } else {
        throw Error("unrecognised record '" + std::string(line) + "'");
      }
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      throw FormatError(source_name, i + 1, e.what());
    }
  }
  if (!ended) throw FormatError(source_name, lines.size(), "truncated knowledge base: missing end marker");
  return kb;
}

}  // namespace fqnres::kb
