#pragma once

#include <string>
#include <vector>

#include "fqnres/frontend/infer.hpp"
#include "fqnres/sketch.hpp"

namespace fqnres::frontend {

/// One sketch per distinct render, in order of first occurrence. Primitive
/// types and names declared by the snippet itself are not sketched.
std::vector<Sketch> make_sketches(const Ast& ast, const Annotations& annotations);

/// Uses that make_sketches turns into sketch occurrences.
bool is_sketchable(const IdentifierUse& use);

/// wrap -> parse -> infer -> make_sketches.
std::vector<Sketch> sketch_source(std::string_view source, bool allow_wrapping = true);

/// One `R <render>` or `U <render>` line per sketch. With `with_spans`, each
/// is followed by an indented line listing the occurrence spans.
std::string format_sketches(const std::vector<Sketch>& sketches, bool with_spans = false);

}  // namespace fqnres::frontend
