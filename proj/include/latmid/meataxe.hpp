#pragma once

#include "latmid/modrep.hpp"

namespace latmid {

// One Meataxe decision: a certificate of irreducibility (Norton's criterion
// in the good case nullity == deg f), or a proper nonzero submodule.
struct MeataxeStep {
    bool irreducible = false;
    FpMat submodule; // dim x k with 0 < k < dim when a split was found
};

MeataxeStep meataxe_step(const KGModule& e, Rng& rng);

// Action restricted to an invariant subspace (columns independent).
KGModule restrict_module(const KGModule& e, const FpMat& basis);
// Action on e / span(basis).
KGModule quotient_module(const KGModule& e, const FpMat& basis);
// Deterministic completion of independent columns to a basis of F_p^n.
FpMat complete_basis(const FpMat& basis);

} // namespace latmid
