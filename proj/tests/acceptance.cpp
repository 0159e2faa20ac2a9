// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <cstdio>

#include "foamlab/selftest.hpp"

int main() {
    int failed = 0;
    foamlab::run_acceptance([&](const foamlab::CriterionResult& r) {
        std::printf("%s  %2d  %-26s %8.3f s", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
        if (r.limit_seconds > 0) std::printf(" (limit %g s)", r.limit_seconds);
        if (!r.detail.empty()) std::printf("  %s", r.detail.c_str());
        std::printf("\n");
        std::fflush(stdout);
        failed += !r.pass;
    });
    std::printf("%d of 11 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
