#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wgc {

struct SuiteLimits {
    int kmax = 0;            // 0 selects the suite default
    std::int64_t trials = 0; // Monte Carlo trials, 0 selects the default
    std::uint64_t seed = 20240601;
};

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool passed() const;
    int failures() const;
};

/// classical-exactness, brute-force, cumulant-identity, laws, free-convergence,
/// montecarlo, z-variables, half-liberated.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws unknown-suite for other names.
SuiteReport run_suite(std::string_view name, const SuiteLimits& limits = {});

} // namespace wgc
