#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pseudoval {

// Outcome of one property battery. `cases` counts generated instances, not
// individual assertions; any failed assertion increments `failures` and leaves a
// note (capped) describing the first few.
struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;
    double seconds = 0.0;

    bool pass() const { return failures == 0; }
};

inline constexpr int kCriterionCount = 11;

// Acceptance criteria, 1-based. Deterministic for a fixed seed.
SuiteResult runCriterion(int index, std::uint64_t seed);
std::vector<SuiteResult> runAllCriteria(std::uint64_t seed);

// Per-module batteries: the module's own axiom suite plus the acceptance
// criteria that exercise it.
std::vector<SuiteResult> runModuleSuite(const std::string& module, std::uint64_t seed);

} // namespace pseudoval
