#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "simplexforge/construct.hpp"
#include "simplexforge/report.hpp"
#include "simplexforge/search.hpp"

namespace simplexforge {

/// Schema version of the result documents written by the CLI.
constexpr int kSchemaVersion = 1;

nlohmann::json report_to_json(const PropertyReport& report);
nlohmann::json trace_to_json(const ConstructionTrace& trace);
nlohmann::json simplex_to_json(const Simplex& simplex, const std::string& role,
                               bool claims_equilateral, bool claims_inscribed);
nlohmann::json search_to_json(const SearchResult& result);

/// Skeleton document: schema version, command and input echo.
nlohmann::json make_document(const std::string& command, const nlohmann::json& input);

/// FNV-1a over the canonical dump with the volatile fields (timing and the
/// hash itself) removed; stored under "determinism_hash".
std::string document_hash(const nlohmann::json& doc);

/// Stamps timing and the determinism hash, then writes atomically
/// (temp file + rename).
void finalize_and_write(nlohmann::json& doc, double timing_ms, const std::string& path);

}  // namespace simplexforge
