#include "fqnres/matching.hpp"

namespace fqnres::resolver {
namespace {

bool fits(const std::string& pattern, const std::string& actual) {
  return is_hole(pattern) || pattern == actual;
}

}  // namespace

bool matches(const Sketch& sketch, const KbEntry& entry) {
  if (sketch.kind != entry.kind || sketch.simple_name != entry.simple_name) return false;
  switch (entry.kind) {
    case EntryKind::Type:
      return fits(sketch.owner, entry.package_name);
    case EntryKind::Method:
      if (!fits(sketch.owner, entry.owner_fqn)) return false;
      if (sketch.param_types.size() != entry.param_types.size()) return false;
      for (std::size_t i = 0; i < entry.param_types.size(); ++i)
        if (!fits(sketch.param_types[i], entry.param_types[i])) return false;
      return fits(sketch.return_type, entry.return_type);
    case EntryKind::Field:
      return fits(sketch.owner, entry.owner_fqn) && fits(sketch.field_type, entry.field_type);
  }
  return false;
}

}  // namespace fqnres::resolver
