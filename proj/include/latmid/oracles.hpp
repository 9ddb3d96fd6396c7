#pragma once

#include "latmid/witt.hpp"

namespace latmid {

// Independent reference routes, deliberately separate from the primary
// implementations they cross-check. Used by the self-test suite and the
// unit tests; enumeration-based, desk scale.

// Intersection by duality: (L' + M')' under the standard inner product.
Lattice intersection_via_duality(const Lattice& l, const Lattice& m);

struct TorsionBrute {
    TorsionModule lower, upper;
    TorsionModule t_mod_lower, t_mod_upper; // types of T/m_-(T), T/m_+(T)
    bool sandwich_ok = false;               // pi·m_+ ⊆ m_- ⊆ m_+ as element sets
};

// Explicit enumeration of T = ⊕ Z/p^{e_i}: evaluates the defining
// image/kernel formulas elementwise and reads off invariant factors from
// order statistics.
TorsionBrute torsion_middles_bruteforce(const TorsionModule& t, long p);

// Witt class by exhaustive isotropic-vector search and hyperbolic-plane
// splitting until the anisotropic kernel remains.
WittClass witt_class_bruteforce(const DiagFormFp& d);

} // namespace latmid
