#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqnres/coordinate.hpp"

namespace fqnres {

enum class EntryKind { Type, Method, Field };

char kind_tag(EntryKind kind) noexcept;  // 'T' / 'M' / 'F'
std::string_view kind_name(EntryKind kind) noexcept;

/// One FQN from a library's class listing, annotated with the dependency that
/// implements it.
///
/// Rendered FQNs:
///   Type    `package.Simple`
///   Method  `owner.name(T1,...,Tn)Ret`
///   Field   `owner.name:Type`
struct KbEntry {
  EntryKind kind = EntryKind::Type;
  std::string owner_fqn;     // declaring type; empty for Type entries
  std::string package_name;  // Type entries only; empty for the default package
  std::string simple_name;
  std::vector<std::string> param_types;
  std::string return_type;
  std::string field_type;
  std::optional<std::string> supertype;
  DependencyCoordinate dependency;

  std::string fqn() const;

  /// The type that has to be imported to use this entry: the type itself, or
  /// the declaring type of a member.
  std::string import_type() const { return kind == EntryKind::Type ? fqn() : owner_fqn; }

  /// The class-listing record, e.g. `M a.B.f(int)void` or `T a.B <: a.C`.
  std::string listing_line() const;

  /// Parses one class-listing record (comments/blank lines are the caller's
  /// business). Throws fqnres::Error with the reason on malformed input.
  static KbEntry parse_listing(std::string_view line, DependencyCoordinate dependency);

  /// Throws fqnres::Error if the kind-specific invariants do not hold.
  void validate() const;

  friend bool operator==(const KbEntry&, const KbEntry&) = default;
};

/// A dotted Java name: non-empty segments of identifier characters.
bool is_qualified_name(std::string_view name) noexcept;
bool is_identifier(std::string_view name) noexcept;

}  // namespace fqnres
