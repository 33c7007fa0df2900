#pragma once

#include <string>
#include <vector>

namespace ringstab::selfcheck {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The full invariant suite behind `ringstab verify`: every documented
/// symmetry, bound, cross-check and closed form, in a fixed order.
std::vector<CheckResult> run_all();

}  // namespace ringstab::selfcheck
