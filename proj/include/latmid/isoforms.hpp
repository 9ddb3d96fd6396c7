#pragma once

#include "latmid/forms.hpp"
#include "latmid/modrep.hpp"

namespace latmid {

// Module over F_p[G] carrying a compatible nondegenerate ε-symmetric form:
// g^T · form · g = form for every generator.
struct FormedKGModule {
    KGModule module;
    FpGram form;

    FormedKGModule() = default;
    FormedKGModule(KGModule m, FpGram f); // validates (IncompatibleForm)
};

// Maximal totally isotropic submodule S with its orthogonal S_perp and the
// induced form on X = S_perp / S (computed in a complement basis inside
// S_perp). Maximality certificate: no simple submodule of X is isotropic.
struct IsotropicTower {
    FpMat s_basis;          // dim x s
    FpMat s_perp_basis;     // dim x (dim - s)
    FpMat complement_basis; // dim x (dim - 2s), complement of S inside S_perp
    FormedKGModule x;       // induced module and form on the complement
};

IsotropicTower max_isotropic_tower(const FormedKGModule& f, uint64_t seed);

// True when some simple submodule of x is totally isotropic (exhaustive over
// hom-space parameterizations of the simples; desk scale).
bool has_isotropic_simple(const FormedKGModule& x, uint64_t seed);

// E^ss with a compatible form: X (with its induced form) ⊕ (Y ⊕ Y') carrying
// the standard hyperbolic ε-pairing, Y = S^ss, Y' its dual module.
FormedKGModule ss_with_form(const FormedKGModule& f, uint64_t seed);

} // namespace latmid
