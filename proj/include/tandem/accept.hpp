#ifndef TANDEM_ACCEPT_HPP
#define TANDEM_ACCEPT_HPP

#include <functional>
#include <string>
#include <vector>

namespace tandem {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;   // measured values
    double seconds = 0.0;
};

struct AcceptOptions {
    bool fast = false;    // reduced sample counts for quick runs
    int series_order = 10;
};

// One entry per acceptance criterion, in declaration order.
std::vector<std::string> acceptance_suite_names();

// Run one named suite ("bijection", "series", "asymptotics", "sampler") or
// "all"; returns results in fixed order.
std::vector<CriterionResult> run_acceptance(const std::string& suite, const AcceptOptions& opts);

} // namespace tandem

#endif
