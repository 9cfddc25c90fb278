#pragma once

#include <string>
#include <vector>

namespace qspectra {

/// Outcome of one verification check.
struct CheckResult {
    std::string name;
    std::string params;
    bool pass = false;
    bool skipped = false;
    std::string witness;
};

inline bool all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass && !r.skipped) return false;
    return true;
}

inline bool any_skipped(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (r.skipped) return true;
    return false;
}

}  // namespace qspectra
