// Regression checks against the published numbers, shared by the test
// runner and the command-line `verify-paper`.
#pragma once

#include <string>
#include <vector>

namespace k3deg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CriterionResult> run_acceptance(int threads = 1);
std::string format_result(const CriterionResult& r);

}  // namespace k3deg
