#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "limw/config.hpp"

namespace limw {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Run the acceptance suite (all nine criteria, or the listed subset),
// printing one pass/fail line per criterion to `log`.
std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, std::ostream& log,
                                            const std::vector<int>& only = {});

}  // namespace limw
