#pragma once

#include "latmid/forms.hpp"
#include "latmid/modrep.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace latmid {

// Line-oriented problem file: `key = value` entries, values may be integers,
// rationals ("num/den"), matrices as bracketed rows, or lists of matrices.
// '#' starts a comment. Multi-line values run until brackets balance.
struct ProblemFile {
    long p = 0;
    int epsilon = 1;
    long dim = 0;
    std::vector<RatMat> generators;
    RatMat gram;
    long word_bound = 1;
    uint64_t seed = 0;
    std::map<std::string, int> field_lines; // field -> first line, for anchored errors

    GroupRepK rep() const { return GroupRepK{generators, word_bound}; }
};

// Structural parse; throws ParseError (CLI exit 2).
ProblemFile parse_problem(const std::string& text);
// Type invariants: prime p, epsilon, matrix shapes, invertibility,
// characteristic, invariance. Throws the named precondition errors (exit 3).
void validate_problem(const ProblemFile& pf);

std::string serialize_matrix(const RatMat& m);
std::string serialize_problem(const ProblemFile& pf);

struct MiddlesFile {
    long p = 0;
    long dim = 0;
    RatMat lattice_l, lattice_m;
    std::map<std::string, int> field_lines;
};

MiddlesFile parse_middles(const std::string& text);
void validate_middles(const MiddlesFile& mf);

} // namespace latmid
