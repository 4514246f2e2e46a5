#pragma once

#include <string>
#include <vector>

namespace toricdiv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Published values and closed forms, each recomputed from the fan.
std::vector<CheckResult> reference_checks(unsigned workers = 0);

}  // namespace toricdiv
