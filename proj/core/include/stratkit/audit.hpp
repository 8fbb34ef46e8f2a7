#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stratkit/common.hpp"

namespace stratkit {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;  // counts on success, first failure otherwise

    std::string line() const;  // "criterion N: PASS|FAIL title (t s) detail"
};

// Runs one of the ten acceptance checks; a check that exceeds its time
// limit fails even when its answers are right.
CriterionResult run_criterion(int id, std::uint64_t budget = kDefaultBudget);
std::vector<CriterionResult> run_audit(const std::vector<int>& ids, std::uint64_t budget = kDefaultBudget);
inline constexpr int kNumCriteria = 10;

}  // namespace stratkit
