#pragma once
// Artifact re-verification: re-checks every recorded check row against the
// tolerance table shipped with this build and validates the embedded config
// hash, printing one PASS/FAIL line per criterion.

#include <ostream>
#include <string>
#include <vector>

namespace oklab {

// Exit codes: 0 = every check passes, 2 = a check fails or a manifest is
// rejected (hash mismatch, unknown criterion/version), 1 = no reports given
// or a report is missing/unreadable.
int verify_reports(const std::vector<std::string>& paths, std::ostream& out);

}  // namespace oklab
