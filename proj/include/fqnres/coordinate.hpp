#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace fqnres {

/// Identity of a third-party library: `group:artifact:version`.
///
/// Two coordinates that differ only in version are distinct libraries as far
/// as the knowledge base is concerned; the resolver separately forbids
/// selecting two versions of the same artifact.
struct DependencyCoordinate {
  std::string group;
  std::string artifact;
  std::string version;

  /// Parses `g:a:v`. Throws fqnres::Error describing the offending part.
  static DependencyCoordinate parse(std::string_view text);
  static std::optional<DependencyCoordinate> try_parse(std::string_view text) noexcept;

  /// Throws fqnres::Error if any field is empty or malformed.
  void validate() const;

  std::string render() const { return group + ":" + artifact + ":" + version; }

  bool same_artifact(const DependencyCoordinate& other) const noexcept {
    return group == other.group && artifact == other.artifact;
  }

  friend auto operator<=>(const DependencyCoordinate&, const DependencyCoordinate&) = default;
  friend bool operator==(const DependencyCoordinate&, const DependencyCoordinate&) = default;
};

/// Either `digits(.digits)*([-+].+)?` or a literal tag such as `java8`.
bool is_valid_version(std::string_view version) noexcept;

}  // namespace fqnres
