#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqnres/coordinate.hpp"
#include "fqnres/kb_entry.hpp"
#include "fqnres/sketch.hpp"

namespace fqnres::kb {

/// Dependencies declared by one project's build file.
struct ProjectItemset {
  std::string project_id;
  std::set<DependencyCoordinate> dependencies;

  friend bool operator==(const ProjectItemset&, const ProjectItemset&) = default;
};

/// One candidate returned by KnowledgeBase::lookup.
struct LookupHit {
  const KbEntry* entry = nullptr;
  std::string variable_key;
};

/// `dependency:import-type`. Every entry that requires the same type from the
/// same library maps to the same key, so a type and its members share one
/// solver variable.
std::string variable_key(const KbEntry& entry);

struct Stats {
  std::size_t types = 0;
  std::size_t methods = 0;
  std::size_t fields = 0;
  std::size_t dependencies = 0;
  std::size_t itemsets = 0;
  std::size_t relations = 0;
};

inline constexpr std::string_view kDumpHeader = "FQNKB v1";

/// FQNs annotated with the libraries implementing them.
///
/// Building (ingest_*, filter_against_ground_truth) is single-writer. Once
/// built or loaded the object is only read, and lookup() is safe to call from
/// several threads.
class KnowledgeBase {
 public:
  using GroundTruth = std::map<DependencyCoordinate, std::set<DependencyCoordinate>>;

  /// Returns the number of entries added; duplicates are skipped.
  std::size_t ingest_class_listing(const std::filesystem::path& path,
                                   const DependencyCoordinate& dependency);
  std::size_t ingest_class_listing_text(std::string_view text,
                                        const DependencyCoordinate& dependency,
                                        const std::string& source_name = "<input>");

  /// Adds a single entry; false if an identical FQN from the same dependency
  /// is already present.
  bool add_entry(KbEntry entry);

  ProjectItemset ingest_pom(const std::filesystem::path& path);
  ProjectItemset ingest_pom_text(std::string_view xml, const std::string& source_name = "<input>");

  /// Returns the number of new relations.
  std::size_t ingest_ground_truth(const std::filesystem::path& path);
  std::size_t ingest_ground_truth_text(std::string_view text,
                                       const std::string& source_name = "<input>");

  /// Drops entries whose artifact is known to the ground truth but whose
  /// version is not. Returns the number removed.
  std::size_t filter_against_ground_truth();

  /// All entries matching `sketch`, sorted by (variable key, entry FQN).
  std::vector<LookupHit> lookup(const Sketch& sketch) const;

  void save(const std::filesystem::path& path) const;
  static KnowledgeBase load(const std::filesystem::path& path);

  /// Deterministic dump: header, sorted records, trailer with counts.
  std::string dump() const;
  static KnowledgeBase parse_dump(std::string_view text, const std::string& source_name = "<input>");

  const std::vector<KbEntry>& entries() const noexcept { return entries_; }
  const std::vector<ProjectItemset>& itemsets() const noexcept { return itemsets_; }
  const GroundTruth& ground_truth() const noexcept { return ground_truth_; }
  std::size_t relation_count() const noexcept;
  Stats stats() const;

  /// Every index id points at an entry and every entry is reachable from its
  /// index. Used by tests.
  bool indexes_consistent() const;

 private:
  static std::string identity(const KbEntry& entry);
  void index(std::size_t id);
  void rebuild_indexes();
  void add_itemset(ProjectItemset itemset);

  std::vector<KbEntry> entries_;
  std::set<std::string> identities_;
  std::map<std::string, std::vector<std::size_t>> by_simple_name_;
  std::map<std::pair<std::string, std::size_t>, std::vector<std::size_t>> by_method_key_;
  std::map<std::string, std::vector<std::size_t>> by_field_name_;
  std::vector<ProjectItemset> itemsets_;
  GroundTruth ground_truth_;
};

}  // namespace fqnres::kb
