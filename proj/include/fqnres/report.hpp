#pragma once

#include "json.hpp"
#include <string>

#include "fqnres/resolver.hpp"

namespace fqnres::report {

inline constexpr int kSchemaVersion = 1;

/// Machine report; field order is fixed. Validated by schema/report.schema.json.
nlohmann::ordered_json to_json(const resolver::Resolution& resolution);

/// Pretty-printed machine report with a trailing newline.
std::string machine(const resolver::Resolution& resolution);

/// Table for terminals. Warnings are left to the caller's error stream.
std::string human(const resolver::Resolution& resolution);

std::string_view status_name(resolver::Resolution::SketchStatus status);

}  // namespace fqnres::report
