#pragma once

#include "latmid/fpmat.hpp"
#include "latmid/lattice.hpp"

namespace latmid {

// Nondegenerate ε-symmetric bilinear form on K^n, by its matrix: B(x,y) = x^T mat y.
struct GramForm {
    RatMat mat;
    int epsilon = 1;

    GramForm() = default;
    GramForm(RatMat m, int eps); // validates symmetry and nondegeneracy
    size_t dim() const { return mat.rows(); }
};

// ε-symmetric form over the residue field.
struct FpGram {
    FpMat mat;
    int epsilon = 1;

    FpGram() = default;
    FpGram(FpMat m, int eps); // validates ε-symmetry (degeneracy checked by callers)
    size_t dim() const { return mat.rows(); }
    long p() const { return mat.p(); }
    bool nondegenerate() const { return mat.rows() == 0 || mat.det() != 0; }
};

namespace testing {
// Flips one sign inside dual_lattice; exists only so the self-test harness
// can prove it detects an injected fault.
inline bool dual_lattice_sign_fault = false;
} // namespace testing

// L' = {x : B(x, y) ∈ R for all y ∈ L}; basis P·G^{-T} with G = P^T·mat·P.
Lattice dual_lattice(const Lattice& l, const GramForm& b);

// pi L' ⊆ L ⊆ L'.
bool is_almost_self_dual(const Lattice& l, const GramForm& b);

// m_-(L, L'): almost self-dual, with dual m_+(L, L').
Lattice asd_via_middle(const Lattice& l, const GramForm& b);

// p^t L with t chosen so the Gram valuations shift into R with minimum 0 or 1.
Lattice asd_rescale(const Lattice& l, const GramForm& b);

// Iterates L <- p^{m-1} L' + L with m minimal such that p^m L' ⊆ L, after
// rescaling so L ⊆ L'; stops at m <= 1. m strictly decreases.
Lattice asd_thompson(const Lattice& l0, const GramForm& b);

// Residual forms of an almost-self-dual lattice. With L' = ⊕ R f_i and
// L = ⊕ p^{e_i} R f_i (e_i ∈ {0,1}): b1 = residues of B on {f_i : e_i = 0}
// (a form on L/pi L'), b2 = residues of pi·B on {f_i : e_i = 1} (on L'/L).
struct ResidualForms {
    FpGram b1, b2;
    SplittingCert basis_witness;    // basis = (f_i), exponents_l = e, exponents_m = 0
    std::vector<size_t> idx1, idx2; // f-indices entering b1 and b2
};

ResidualForms residual_forms(const Lattice& l, const GramForm& b);

} // namespace latmid
