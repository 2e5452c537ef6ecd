#pragma once

#include <string>
#include <vector>

namespace brauer {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// The full verification battery; one entry per criterion.
std::vector<CriterionResult> run_acceptance();

/// Prints one line per criterion to stdout; returns true iff all pass.
bool print_acceptance(const std::vector<CriterionResult>& results);

}  // namespace brauer
