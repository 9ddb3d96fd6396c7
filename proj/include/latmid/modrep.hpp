#pragma once

#include "latmid/fppoly.hpp"
#include "latmid/lattice.hpp"
#include "latmid/randgen.hpp"

#include <cstdint>
#include <vector>

namespace latmid {

// Representation of a (finite) group over K by generator matrices. word_bound
// caps the spinning length used to build stable lattices; for the test corpus
// it is the group order. Boundedness is a checked runtime condition.
struct GroupRepK {
    std::vector<RatMat> generators;
    long word_bound = 1;
};

// Module over the group algebra F_p[G], by invertible generator matrices.
struct KGModule {
    long p = 2;
    size_t dim = 0;
    std::vector<FpMat> generators;

    KGModule() = default;
    KGModule(long p_, size_t dim_, std::vector<FpMat> gens);
};

struct SSFactor {
    KGModule module; // irreducible
    size_t multiplicity = 1;
    std::vector<FpPoly> fingerprint;
};

// Composition-factor multiset of a module.
struct SSDecomp {
    long p = 2;
    size_t total_dim = 0;
    size_t generator_count = 0;
    std::vector<SSFactor> factors;
};

// L = sum of w·M0 over generator words of length <= rep.word_bound, verified
// G-stable; UnboundedAction when the sum does not stabilize within the bound.
Lattice stable_lattice(const GroupRepK& rep, const Lattice& m0);
bool is_stable(const GroupRepK& rep, const Lattice& l);

// E_L = L/pi L: generators rewritten in the basis of L and residue-mapped.
KGModule reduce_mod_pi(const GroupRepK& rep, const Lattice& l);

// Meataxe semisimplification; deterministic given seed.
SSDecomp semisimplify(const KGModule& e, uint64_t seed);

bool ss_isomorphic(const SSDecomp& a, const SSDecomp& b);

// Brauer-Nesbitt instance: semisimplifications of E_L and E_M agree.
bool brauer_nesbitt_check(const GroupRepK& rep, const Lattice& l, const Lattice& m, uint64_t seed);

// Basis of Hom_{F_p[G]}(a, b), as dim(b) x dim(a) matrices.
std::vector<FpMat> hom_space(const KGModule& a, const KGModule& b);

// Fingerprint screen plus an explicit intertwiner solve; any nonzero hom
// between irreducibles of equal dimension is invertible.
bool irreducible_isomorphic(const KGModule& a, const KGModule& b);

// Characteristic polynomials of a fixed deterministic word list.
std::vector<FpPoly> word_fingerprint(const KGModule& m);

KGModule dual_module(const KGModule& m); // g -> g^{-T}
KGModule direct_sum(const KGModule& a, const KGModule& b);
KGModule module_of_decomp(const SSDecomp& d); // block sum with multiplicities

} // namespace latmid
