#pragma once

#include <string>
#include <vector>

namespace ramanujan {

/// Outcome of one identity verification: which identity, the orders it was
/// checked at, and either the order it verified through or the first
/// discrepancy found.
struct CheckReport {
    std::string name;
    bool passed = false;
    int xorder = -1;  // -1 when the check is q-only
    int qorder = -1;
    std::string detail;
};

inline bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

}  // namespace ramanujan
