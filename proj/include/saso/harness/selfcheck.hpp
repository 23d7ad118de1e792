#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace saso::harness {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    int checks = 0;
    std::vector<std::string> failures;
};

struct SelfCheckOptions {
    int seeds = 10;            // seeds 1..N for the scenario criteria
    std::string artifact_dir;  // scratch space for the determinism criterion
};

// Runs the full acceptance suite, printing one pass/fail line per criterion
// to `log`. Returns every criterion's outcome.
std::vector<CriterionResult> run_acceptance(const SelfCheckOptions& options, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace saso::harness
