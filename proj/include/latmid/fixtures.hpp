#pragma once

#include "latmid/forms.hpp"
#include "latmid/modrep.hpp"

#include <string>
#include <vector>

namespace latmid {

// Small-group test corpus: generator matrices over Q with an invariant form.
struct GroupFixture {
    std::string name;
    std::vector<RatMat> generators;
    long order = 1;
    RatMat invariant_gram;
    int epsilon = 1;

    GroupRepK rep() const { return GroupRepK{generators, order}; }
    GramForm form() const { return GramForm(invariant_gram, epsilon); }
};

// C2, C3, S3, D4 (orthogonal) and Q8 (4-dimensional symplectic).
const std::vector<GroupFixture>& fixture_groups();

// Enumerates the full matrix group generated by the given matrices (BFS over
// products); UnboundedAction past max_elements.
std::vector<RatMat> enumerate_group(const std::vector<RatMat>& generators, size_t max_elements);

} // namespace latmid
