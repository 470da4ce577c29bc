#ifndef COBORDISM_ACCEPTANCE_HPP
#define COBORDISM_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace cobordism {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;   // deterministic summary of what was checked
    double seconds = 0.0; // wall time, not part of the deterministic report
};

struct AcceptanceOptions {
    // Also run `selftest` twice and compare the outputs byte for byte.
    bool compare_selftest_runs = false;
    // Called after each criterion finishes.
    std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// "PASS  3  P1 localization: ..." without timing.
std::string format_result(const CriterionResult& r);

} // namespace cobordism

#endif
