#include "simplexforge/result_doc.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "simplexforge/errors.hpp"

namespace simplexforge {

nlohmann::json report_to_json(const PropertyReport& report) {
    nlohmann::json j;
    j["verdict"] = verdict_name(report.verdict);
    j["worst_residual"] = report.worst_residual;
    j["witness"] = report.witness;
    if (report.value) j["value"] = *report.value;
    nlohmann::json items = nlohmann::json::array();
    for (const ReportItem& item : report.details) {
        items.push_back({{"label", item.label},
                         {"residual", item.residual},
                         {"verdict", verdict_name(item.verdict)}});
    }
    j["details"] = items;
    return j;
}

nlohmann::json trace_to_json(const ConstructionTrace& trace) {
    nlohmann::json levels = nlohmann::json::array();
    for (const LevelRecord& r : trace.levels) {
        nlohmann::json j;
        j["level"] = r.level;
        j["branch"] = r.branch == Branch::Case1 ? "case1" : "case2";
        if (r.t_star) j["t_star"] = *r.t_star;
        if (r.t_prime) j["t_prime"] = *r.t_prime;
        if (r.rho0) j["rho0"] = *r.rho0;
        if (r.phase) j["phase"] = *r.phase;
        if (r.parameter) j["parameter"] = *r.parameter;
        j["t0"] = r.t0;
        j["facet_diameter_before"] = r.facet_diameter_before;
        j["final_diameter"] = r.final_diameter;
        nlohmann::json margins;
        if (r.apex_outside_margin) margins["apex_outside_margin"] = *r.apex_outside_margin;
        margins["diameter_margin"] = r.diameter_margin;
        j["margins"] = margins;
        j["degenerate"] = r.degenerate;
        levels.push_back(j);
    }
    return nlohmann::json{{"levels", levels},
                          {"final_diameter", trace.final_diameter},
                          {"degenerate_margin", trace.degenerate_margin}};
}

nlohmann::json simplex_to_json(const Simplex& simplex, const std::string& role,
                               bool claims_equilateral, bool claims_inscribed) {
    nlohmann::json j;
    j["role"] = role;
    j["vertices"] = simplex.vertices;
    j["diameter"] = simplex.diameter;
    j["diameter_pair"] = {simplex.diameter_pair.first, simplex.diameter_pair.second};
    j["claims"] = {{"equilateral", claims_equilateral}, {"inscribed", claims_inscribed}};
    return j;
}

nlohmann::json search_to_json(const SearchResult& result) {
    nlohmann::json j;
    j["points"] = result.points;
    j["common_distance"] = result.common_distance;
    j["residual"] = result.residual;
    j["success"] = result.success;
    j["restart_index"] = result.restart_index;
    return j;
}

nlohmann::json make_document(const std::string& command, const nlohmann::json& input) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["input"] = input;
    return doc;
}

std::string document_hash(const nlohmann::json& doc) {
    nlohmann::json clean = doc;
    clean.erase("timing_ms");
    clean.erase("determinism_hash");
    const std::string dump = clean.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

void finalize_and_write(nlohmann::json& doc, double timing_ms, const std::string& path) {
    doc["timing_ms"] = timing_ms;
    doc["determinism_hash"] = document_hash(doc);
    if (path.empty()) return;

    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << doc.dump(2) << "\n";
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw IoError("rename to " + target.string() + " failed: " + ec.message());
}

}  // namespace simplexforge
