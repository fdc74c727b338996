#pragma once

#include <string>
#include <vector>

namespace rp2braid::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> failures;  // empty when passed
    std::string summary;
    double seconds = 0;
};

CriterionResult run_criterion(int id);  // 1..10
std::vector<CriterionResult> run_all();

}  // namespace rp2braid::acceptance
