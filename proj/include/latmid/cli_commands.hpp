#pragma once

#include "latmid/pipeline.hpp"
#include "latmid/selftest.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace latmid {

// ANSI color unless LM_COLOR=0 or stdout is not a terminal.
bool color_enabled();

struct ReduceOptions {
    std::string path;
    bool json = false;
    std::optional<uint64_t> seed;
};
// 0: all checks true; 1: failed theorem check (implementation bug);
// 2: parse error; 3: precondition violation.
int run_reduce(const ReduceOptions& o, std::ostream& out, std::ostream& err);

struct MiddlesOptions {
    std::string path; // optional when random_pairs > 0
    bool verify = false;
    long random_pairs = 0;
    uint64_t seed = 1;
    long dim = 2;
    long prime = 5;
};
int run_middles(const MiddlesOptions& o, std::ostream& out, std::ostream& err);

int run_selftest(const SelfTestOptions& o, std::ostream& out);

} // namespace latmid
