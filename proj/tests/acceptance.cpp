// Acceptance suite: one pass/fail line per criterion; non-zero exit if any fails.

#include <chrono>
#include <iostream>

#include "casimir/verification.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto results = casimir::verification::run_acceptance_suite();
    const bool all = casimir::verification::report(results, std::cout);
    const auto elapsed = std::chrono::duration<double>(clock::now() - start).count();
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
    }
    std::cout << passed << "/" << results.size() << " criteria passed in " << elapsed << " s\n";
    return all ? 0 : 1;
}
