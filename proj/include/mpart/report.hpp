#pragma once

#include "mpart/obstruction.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace mpart {

inline constexpr const char* kVersion = "1.0.0";

/// {"m": 2, "rows": ["0*", "*1"]}
nlohmann::json matrix_json(const PatternMatrix& m);
/// {"parts": [p0, p1, ...]}
nlohmann::json witness_json(const PartAssignment& a);
nlohmann::json certificate_json(const MinimalityCertificate& cert);

/// Report body without timing, so equal inputs give equal bytes.
nlohmann::json report_json(const EnumerationReport& report);
/// Header "n\tgraph6\tcertificate-ok", one row per obstruction.
std::string report_tsv(const EnumerationReport& report);

/// Directory-safe matrix name: rows joined by '-', '*' written as 's'.
std::string matrix_slug(const PatternMatrix& m);

/// Writes <root>/<slug>/<class>/n<k>.g6 for k = 1..n_max (one graph6 per
/// line) and <root>/<slug>/<class>/manifest.json. Returns the class directory.
std::filesystem::path persist_catalog(const EnumerationReport& report, const std::filesystem::path& root);

}  // namespace mpart
