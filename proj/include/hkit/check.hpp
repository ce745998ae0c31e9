#pragma once

#include <string>
#include <vector>

namespace hkit {

/// Audit rows compare against printed reference data; a mismatch there is
/// itemized but does not fail a run.
enum class CheckMode { Exact, Numeric, Audit };

inline const char* mode_name(CheckMode m) {
    switch (m) {
        case CheckMode::Exact: return "exact";
        case CheckMode::Numeric: return "numeric";
        case CheckMode::Audit: return "audit";
    }
    return "?";
}

/// Outcome of one verification.
struct CheckReport {
    std::string suite;
    std::string relation;
    std::string anchor;
    CheckMode mode = CheckMode::Exact;
    double residual = 0.0;
    bool pass = false;
    std::string detail;

    bool counts() const { return mode != CheckMode::Audit; }
};

using CheckList = std::vector<CheckReport>;

}  // namespace hkit
