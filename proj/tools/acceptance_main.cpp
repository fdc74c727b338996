#include <cstdio>

#include "rp2braid/acceptance.hpp"

int main() {
    int failed = 0;
    for (const auto& r : rp2braid::acceptance::run_all()) {
        std::printf("criterion %2d: %s  %s (%.2f s)\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
        if (!r.summary.empty()) std::printf("    %s\n", r.summary.c_str());
        for (const auto& f : r.failures) std::printf("    - %s\n", f.c_str());
        failed += !r.passed;
    }
    std::printf("%d of 10 criteria pass\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
