#pragma once

#include "qindex/quartic_index.hpp"

#include "json.hpp"

#include <string>

namespace qindex {

/// Bump on any field change of the JSON documents below.
inline constexpr const char* kReportSchemaVersion = "1.0.0";

/// Machine-readable analysis document (validates against report.schema.json).
nlohmann::json report_to_json(const IndexReport& rep);

/// Machine-readable family-verification document.
nlohmann::json family_to_json(const FamilyReport& rep);

/// Human-readable renderings of the same content.
std::string render_report(const IndexReport& rep);
std::string render_family(const FamilyReport& rep);

}  // namespace qindex
