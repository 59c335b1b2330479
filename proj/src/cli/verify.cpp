#include "oklab/cli/verify.hpp"

#include "oklab/cli/manifest.hpp"
#include "oklab/tolerances.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace oklab {

namespace {

// Re-checks one report. Returns false if the report is rejected (tampered
// manifest, unknown version) or any check row violates this build's table.
bool verify_one(const std::string& path, const nlohmann::json& doc, std::ostream& out) {
    bool ok = true;
    if (!doc.is_object() || !doc.contains("manifest") || !doc.contains("checks") ||
        !doc.contains("config")) {
        out << "FAIL  " << path << ": not a report artifact (missing manifest/config/checks)\n";
        return false;
    }
    const nlohmann::json& manifest = doc["manifest"];
    const std::string version = manifest.value("artifact_version", "");
    if (version != kArtifactVersion) {
        out << "FAIL  " << path << ": unsupported artifact_version '" << version
            << "' (this build verifies version " << kArtifactVersion << ")\n";
        return false;
    }
    // The manifest hash must match the embedded config byte-for-byte;
    // nlohmann dumps are canonical (sorted keys, shortest doubles).
    const std::string recomputed = fnv1a64_hex(doc["config"].dump());
    const std::string recorded = manifest.value("config_hash", "");
    if (recomputed != recorded) {
        out << "FAIL  " << path << ": config_hash mismatch (recorded " << recorded
            << ", recomputed " << recomputed << ")\n";
        return false;
    }

    for (const nlohmann::json& row : doc["checks"]) {
        const std::string criterion = row.value("criterion", "");
        const double value = row.value("value", 0.0);
        const ToleranceRule* rule = find_tolerance(criterion);
        char line[256];
        if (rule == nullptr) {
            std::snprintf(line, sizeof line, "FAIL  %-24s %12.6g  (unknown criterion)\n",
                          criterion.c_str(), value);
            out << line;
            ok = false;
            continue;
        }
        const bool pass = tolerance_holds(*rule, value);
        std::snprintf(line, sizeof line, "%s  %-24s %12.6g  (%s)\n", pass ? "PASS" : "FAIL",
                      criterion.c_str(), value, tolerance_to_string(*rule).c_str());
        out << line;
        if (!pass) ok = false;
    }
    return ok;
}

}  // namespace

int verify_reports(const std::vector<std::string>& paths, std::ostream& out) {
    if (paths.empty()) {
        out << "error: no report files given\n";
        return 1;
    }
    bool all_ok = true;
    for (const std::string& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            out << "error: cannot read '" << path << "'\n";
            return 1;
        }
        std::ostringstream bytes;
        bytes << in.rdbuf();
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(bytes.str());
        } catch (const nlohmann::json::parse_error& e) {
            out << "FAIL  " << path << ": not valid JSON (" << e.what() << ")\n";
            all_ok = false;
            continue;
        }
        out << "== " << path << "\n";
        if (!verify_one(path, doc, out)) all_ok = false;
    }
    out << (all_ok ? "verification passed\n" : "verification failed\n");
    return all_ok ? 0 : 2;
}

}  // namespace oklab
