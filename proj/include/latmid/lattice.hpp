#pragma once

#include "latmid/dvrlin.hpp"

#include <utility>
#include <vector>

namespace latmid {

// A lattice in K^n: full-rank free R-submodule, held as an invertible basis
// matrix (columns R-span the lattice). Equality and containment always use
// the GL_n(R) criterion on change-of-basis matrices, never matrix equality.
class Lattice {
public:
    Lattice() = default; // zero-dimensional
    Lattice(RatMat basis, long p);
    static Lattice standard(size_t n, long p);
    static Lattice diagonal(const std::vector<Rat>& d, long p);

    size_t dim() const { return basis_.rows(); }
    long p() const { return p_; }
    const RatMat& basis() const { return basis_; }
    const RatMat& basis_inverse() const { return inv_; }

    // Unique column Hermite form over R; stable across equal lattices.
    RatMat canonical_basis() const;

    Lattice scaled(const Rat& c) const;    // c != 0
    Lattice twist(long a) const;           // L(a) = p^{-a} L
    Lattice apply(const RatMat& g) const;  // g·L, g invertible

    bool contains(const Lattice& other) const; // other ⊆ this
    bool operator==(const Lattice& other) const;
    bool operator!=(const Lattice& other) const { return !(*this == other); }

private:
    long p_ = 2;
    RatMat basis_, inv_;
};

Lattice lattice_sum(const Lattice& l, const Lattice& m);
// Exact-kernel route (saturated R-kernel of [P | -Q]); the duality route
// (L' + M')' is kept as an independent oracle, see oracles.hpp.
Lattice lattice_intersection(const Lattice& l, const Lattice& m);

// Common diagonalizing basis: L = ⊕ p^{el_i} R x_i and M = ⊕ p^{em_i} R x_i.
struct SplittingCert {
    RatMat basis;
    std::vector<long> exponents_l;
    std::vector<long> exponents_m;
};

SplittingCert compatible_splitting(const Lattice& l, const Lattice& m);
Lattice lattice_from_cert(const RatMat& basis, const std::vector<long>& exps, long p);

// Minimal a >= 0 with p^a L ⊆ M and p^a M ⊆ L.
long codistance(const Lattice& l, const Lattice& m);

Lattice middle_lower(const Lattice& l, const Lattice& m);
Lattice middle_upper(const Lattice& l, const Lattice& m);
// Same middles computed with |n| <= nrange; widening past ceil(a/2) must not
// change the result (truncation-soundness oracle).
Lattice middle_lower(const Lattice& l, const Lattice& m, long nrange);
Lattice middle_upper(const Lattice& l, const Lattice& m, long nrange);

// Torsion R-module of finite exponent, by its multiset of cyclic exponents
// (T ≅ ⊕ R/p^{e_i}R), stored sorted descending. Empty list = zero module.
struct TorsionModule {
    std::vector<long> exponents;
    TorsionModule() = default;
    explicit TorsionModule(std::vector<long> e);
    long exponent() const { return exponents.empty() ? 0 : exponents.front(); }
    bool operator==(const TorsionModule&) const = default;
};

// (m_-(T), m_+(T)): per cyclic summand R/p^m the lower middle has exponent
// floor(m/2), the upper ceil(m/2).
std::pair<TorsionModule, TorsionModule> torsion_middles(const TorsionModule& t);

// Elementary divisors of big/small as an abstract torsion module.
TorsionModule quotient_type(const Lattice& big, const Lattice& small);

} // namespace latmid
