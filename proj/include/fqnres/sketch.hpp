#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fqnres/kb_entry.hpp"
#include "fqnres/source_span.hpp"

namespace fqnres {

inline constexpr std::string_view kHole = "?";

/// An FQN template in which unresolved parts are `?`.
///
///   Type    `(pkg|?).Simple`
///   Method  `(owner|?).name(A1,...,An)(Ret|?)`
///   Field   `(owner|?).name:(T|?)`
///
/// For Type sketches `owner` holds the package. A hole-free sketch renders
/// exactly like the FQN it stands for.
struct Sketch {
  EntryKind kind = EntryKind::Type;
  std::string owner{kHole};
  std::string simple_name;
  std::vector<std::string> param_types;
  std::string return_type{kHole};
  std::string field_type{kHole};
  std::vector<SourceSpan> occurrences;

  std::string render() const;
  bool has_holes() const;

  /// Inverse of render(); occurrences are left empty. Throws fqnres::Error.
  static Sketch parse(std::string_view text);
};

inline bool is_hole(std::string_view part) noexcept { return part == kHole; }

}  // namespace fqnres
