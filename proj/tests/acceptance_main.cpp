#include <cstdio>
#include <cstring>
#include <iostream>

#include "cobordism/acceptance.hpp"

int main(int argc, char** argv)
{
    cobordism::AcceptanceOptions options;
    options.compare_selftest_runs = !(argc > 1 && std::strcmp(argv[1], "--quick") == 0);
    options.on_result = [](const cobordism::CriterionResult& r) {
        char seconds[32];
        std::snprintf(seconds, sizeof seconds, "%.2f", r.seconds);
        std::cout << cobordism::format_result(r) << "  (" << seconds << " s)" << std::endl;
    };
    int failed = 0;
    for (const auto& r : cobordism::run_acceptance(options)) failed += r.passed ? 0 : 1;
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << 10 - failed << "/10" << std::endl;
    return failed ? 1 : 0;
}
