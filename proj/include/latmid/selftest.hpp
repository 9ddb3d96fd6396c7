#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace latmid {

// Configuration for the acceptance-criteria suite. cases < 0 runs the
// full documented scale; cases = 0 runs nothing (vacuous pass); any other
// value replaces the per-criterion random-case counts (exhaustive parts stay
// exhaustive).
struct SelfTestOptions {
    uint64_t seed = 20260810;
    long cases = -1;
    int max_dim = 6;
    std::vector<long> primes = {3, 5, 7};
    bool inject_dual_fault = false;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    long cases_run = 0;
    double seconds = 0.0;
    std::string detail; // first counterexample (problem-file syntax) or failure note
};

std::vector<CriterionResult> run_acceptance(const SelfTestOptions& opt, std::ostream& log, bool color);

} // namespace latmid
