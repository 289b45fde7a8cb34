#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace k1witt::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // first failure witness, empty when passed
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

// The randomized-and-exhaustive property suites behind `verify`.  Every
// check is deterministic given the seed (the generator is splitmix64, so
// a fixed seed reproduces bit-identical output).
SuiteResult run_fields_suite(std::uint64_t seed);
SuiteResult run_forms_suite(std::uint64_t seed);
SuiteResult run_equivariant_suite(std::uint64_t seed);
SuiteResult run_padic_suite(std::uint64_t seed);
SuiteResult run_k1_suite(std::uint64_t seed);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_all(std::uint64_t seed);

} // namespace k1witt::verify
