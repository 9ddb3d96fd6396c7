#pragma once

#include "latmid/isoforms.hpp"
#include "latmid/witt.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latmid {

// End-to-end reduction of a G-invariant form on V over K to a compatible form
// on V_k = E1 ⊕ E2, with per-theorem check results. Every check is true on
// valid input; a false entry indicates an implementation bug.
struct ReductionReport {
    long p = 3;
    int epsilon = 1;
    size_t dim = 0;
    size_t generator_count = 0;
    Lattice stable;
    Lattice asd;
    FormedKGModule e1, e2;
    bool orthogonal = true;
    WittClass witt_q1, witt_q2, witt_total; // orthogonal case only
    std::vector<std::pair<std::string, bool>> checks;

    bool all_checks() const;
    void add_check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
};

// Stable lattice from the standard lattice, made almost self-dual by both
// routes (cross-checked), residual forms, semisimplification with forms.
ReductionReport reduce_with_form(const GroupRepK& rep, const GramForm& b, const ValConfig& cfg,
                                 uint64_t seed);
ReductionReport reduce_with_form_from(const GroupRepK& rep, const GramForm& b, const ValConfig& cfg,
                                      const Lattice& m0, uint64_t seed);

// Test-fixture helper: averages b0 over the full finite group generated by
// the generator matrices. Postcondition: nondegenerate (throws otherwise).
GramForm symmetrize(const std::vector<RatMat>& generators, const RatMat& b0, int epsilon,
                    size_t max_elements = 4096);

} // namespace latmid
