// Acceptance gate: runs the eleven release criteria with pinned per-criterion
// time budgets and a 90-second total. One line per criterion; nonzero exit on
// any failure or budget overrun.
#include <pseudoval/suites.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>

int main() {
    std::uint64_t seed = 2026;
    if (const char* env = std::getenv("PSEUDOVAL_SEED")) {
        char* end = nullptr;
        seed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            std::fprintf(stderr, "bad PSEUDOVAL_SEED: %s\n", env);
            return 1;
        }
    }

    static constexpr double kBudget[pseudoval::kCriterionCount] = {
        10.0, 5.0, 5.0, 5.0, 5.0, 20.0, 5.0, 10.0, 1.0, 10.0, 20.0};
    constexpr double kTotalBudget = 90.0;

    bool ok = true;
    double total = 0.0;
    std::printf("acceptance gate (seed %llu)\n", static_cast<unsigned long long>(seed));
    for (int i = 1; i <= pseudoval::kCriterionCount; ++i) {
        pseudoval::SuiteResult r = pseudoval::runCriterion(i, seed);
        total += r.seconds;
        bool inBudget = r.seconds < kBudget[i - 1];
        bool pass = r.pass() && inBudget;
        ok = ok && pass;
        std::printf("criterion-%-2d %s  cases=%zu failures=%zu %.2fs (budget %.0fs)\n", i,
                    pass ? "PASS" : "FAIL", r.cases, r.failures, r.seconds, kBudget[i - 1]);
        if (!r.pass())
            for (const std::string& note : r.notes) std::printf("    %s\n", note.c_str());
        if (!inBudget) std::printf("    over budget\n");
    }
    bool inTotal = total < kTotalBudget;
    ok = ok && inTotal;
    std::printf("total %.2fs (budget %.0fs): %s\n", total, kTotalBudget,
                inTotal ? "ok" : "over");
    return ok ? 0 : 1;
}
