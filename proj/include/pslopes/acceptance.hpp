#pragma once

#include <string>
#include <vector>

namespace pslopes {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double budget = 0;  // wall-clock limit in seconds
    std::string detail;
};

// Runs the listed criteria (all when empty), in order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});

std::string format_line(const CriterionResult& r);

}  // namespace pslopes
