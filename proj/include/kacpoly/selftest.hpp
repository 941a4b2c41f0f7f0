#pragma once

#include <string>
#include <vector>

namespace kacpoly {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cross-checks every computational path on the built-in quivers.
std::vector<CheckResult> run_selftest(int jobs = 1);

} // namespace kacpoly
