#pragma once

#include "latmid/forms.hpp"

#include <utility>
#include <vector>

namespace latmid {

// Diagonal quadratic form over K: ⟨entries⟩, all nonzero.
struct DiagFormK {
    std::vector<Rat> entries;
};

// Diagonal quadratic form over F_p, all entries nonzero mod p.
struct DiagFormFp {
    long p = 0;
    std::vector<long> entries;
};

// Canonical Witt-ring invariant over F_p (p odd): rank parity plus the signed
// discriminant square class; disc == 0 marks the zero class (anisotropic
// kernel 0), otherwise disc ∈ {1, smallest non-square}.
struct WittClass {
    long p = 0;
    int rank_parity = 0;
    long disc = 0;
    bool is_zero() const { return rank_parity == 0 && disc == 0; }
    bool operator==(const WittClass&) const = default;
    std::string str() const;
};

// Canonicalizes: disc± = (-1)^{r(r-1)/2} ∏ entries; zero class iff hyperbolic.
WittClass witt_class_k(const DiagFormFp& d);
// Small diagonal representative of a class (empty / ⟨d⟩ / ⟨1, -s⟩).
DiagFormFp witt_representative(const WittClass& w);
WittClass witt_add(const WittClass& a, const WittClass& b);
// Class of ⟨c⟩ ⊗ w (scales odd-rank discriminants by the class of c).
WittClass witt_scale(const WittClass& w, long c);

// Springer residues of a diagonal form over K: entries u·pi^e with e even feed
// ∂1 with ⟨res u⟩, e odd feed ∂2. The optional unit replaces the uniformizer
// pi = p by unit·p (∂2 depends on that choice, ∂1 does not).
std::pair<WittClass, WittClass> springer_residues(const DiagFormK& d, const ValConfig& cfg,
                                                  const Rat& uniformizer_unit = Rat(1));

// Orthogonal basis (x_i) with each x_i ∈ M and M = ⊕ (M ∩ K x_i), plus the
// diagonal form (q(x_i)); follows the valuation-minimizing splitting step.
struct CompatibleDiag {
    DiagFormK diag;
    RatMat basis;
};
CompatibleDiag diagonalize_compatible(const GramForm& b, const Lattice& m);

// Symmetric Gauss diagonalization over F_p, p odd; input must be nondegenerate.
DiagFormFp fp_diagonalize(const FpGram& g);

WittClass witt_of_fpgram(const FpGram& g);

// Th. 3.3.2 instance: Springer residues of q against the residual forms of L.
bool verify_springer_vs_residuals(const Lattice& l, const GramForm& b);

} // namespace latmid
