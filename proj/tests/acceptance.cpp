#include "wgcalc/error.hpp"
#include "wgcalc/verify.hpp"

#include <cstdio>

namespace {

struct Criterion {
    int number;
    const char* title;
    const char* suite;
    wgc::SuiteLimits limits;
};

} // namespace

int main()
{
    const std::uint64_t seed = 20240601;
    const Criterion criteria[] = {
        {1, "classical exactness, total k <= 6, n = k..k+3", "classical-exactness", {6, 0, seed}},
        {2, "brute force over S_n (n <= 6, k <= 5) and H_n (n <= 4, k <= 4)", "brute-force", {5, 0, seed}},
        {3, "moment-cumulant inversion, r <= 3, k_i <= 4", "cumulant-identity", {4, 0, seed}},
        {4, "limit-law cumulant tables, r <= 4, k_i <= 6", "laws", {6, 0, seed}},
        {5, "free deviation ratio <= 0.6 at m = 8, 16, 32", "free-convergence", {4, 0, seed}},
        {6, "Monte Carlo O_50, S_100, H_100 with 1e5 trials, 5 stderr", "montecarlo", {0, 100000, seed}},
        {7, "Z-variable cumulants, l <= 3, r <= 3", "z-variables", {3, 0, seed}},
        {8, "half-liberated: U_4, U-pairs, P^s, compound Poisson", "half-liberated", {3, 100000, seed}},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        try {
            const auto report = wgc::run_suite(c.suite, c.limits);
            const bool ok = report.passed();
            failed += ok ? 0 : 1;
            std::printf("%s criterion %d: %s (%zu checks, %d failed, %.1f s)\n", ok ? "PASS" : "FAIL", c.number,
                        c.title, report.checks.size(), report.failures(), report.seconds);
            int shown = 0;
            for (const auto& check : report.checks)
                if (!check.passed && shown++ < 5)
                    std::printf("    %s: expected %s, got %s\n", check.name.c_str(), check.expected.c_str(),
                                check.actual.c_str());
        } catch (const std::exception& e) {
            ++failed;
            std::printf("FAIL criterion %d: %s (%s)\n", c.number, c.title, e.what());
        }
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
