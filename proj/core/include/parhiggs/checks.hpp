#ifndef PARHIGGS_CHECKS_HPP
#define PARHIGGS_CHECKS_HPP

#include <string>
#include <vector>

namespace parhiggs {

// Built-in verification battery. Each criterion is a self-contained end-to-end
// check with an optional wall-clock budget; a failed identity, a thrown
// exception, or a blown budget marks it failed (checks never throw for a
// mathematical mismatch -- the failure is reported in `detail`).
struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs one criterion (1..9). `threads` parallelizes grid enumeration where it
// applies; results are independent of it.
CheckResult run_criterion(int criterion, int threads = 1);

// Named suites: "euler" -> {2}, "wallcross" -> {5},
// "consistency" -> {3,4,6,9}, "all" -> {1..9}.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<CheckResult> run_suite(const std::string& suite, int threads = 1);

} // namespace parhiggs

#endif
