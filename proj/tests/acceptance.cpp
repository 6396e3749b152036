// Acceptance suite driver: one pass/fail line per criterion.
#include <cstdio>
#include <cstring>
#include <string>

#include "tandem/accept.hpp"

int main(int argc, char** argv) {
    tandem::AcceptOptions opts;
    std::string suite = "all";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0)
            opts.fast = true;
        else
            suite = argv[i];
    }
    auto results = tandem::run_acceptance(suite, opts);
    bool all_ok = true;
    for (const auto& r : results) {
        std::printf("[%s] %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : " : ", r.detail.c_str());
        all_ok = all_ok && r.pass;
    }
    if (results.empty()) {
        std::fprintf(stderr, "no acceptance criteria ran for suite '%s'\n", suite.c_str());
        return 2;
    }
    std::printf("%s\n", all_ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return all_ok ? 0 : 1;
}
