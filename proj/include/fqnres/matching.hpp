#pragma once

#include "fqnres/kb_entry.hpp"
#include "fqnres/sketch.hpp"

namespace fqnres::resolver {

/// True iff `entry` can fill `sketch`: same kind and simple name, and every
/// non-hole position equal. Supertypes are not consulted.
bool matches(const Sketch& sketch, const KbEntry& entry);

}  // namespace fqnres::resolver
