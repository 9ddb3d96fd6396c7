#pragma once

#include "latmid/fpmat.hpp"
#include "latmid/rat.hpp"

#include <cstdint>
#include <vector>

namespace latmid {

class Rng; // randgen.hpp

// Univariate polynomial over F_p, coefficients low degree first, trailing
// zeros stripped (zero polynomial has empty coefficient list).
struct FpPoly {
    long p = 0;
    std::vector<long> c;

    FpPoly() = default;
    FpPoly(long p_, std::vector<long> coeffs);
    static FpPoly zero(long p) { return FpPoly(p, {}); }
    static FpPoly constant(long p, long v) { return FpPoly(p, {v}); }
    static FpPoly x(long p) { return FpPoly(p, {0, 1}); }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    long lead() const { return c.back(); }
    void normalize();
    FpPoly monic() const;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    bool operator==(const FpPoly& o) const = default;

    std::pair<FpPoly, FpPoly> divmod(const FpPoly& o) const;
    FpPoly operator%(const FpPoly& o) const { return divmod(o).second; }
    FpPoly operator/(const FpPoly& o) const { return divmod(o).first; }
    FpPoly derivative() const;
    long eval(long x) const;

    std::string str() const;
};

FpPoly poly_gcd(FpPoly a, FpPoly b); // monic gcd
FpPoly poly_powmod(const FpPoly& base, const Int& exp, const FpPoly& mod);
FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod);

// Irreducible factorization (squarefree + distinct-degree + equal-degree
// split; equal-degree splitting is randomized and deterministic given rng).
struct PolyFactor {
    FpPoly factor; // monic irreducible
    long multiplicity;
};
std::vector<PolyFactor> poly_factor(const FpPoly& f, Rng& rng);

// Monic characteristic polynomial det(xI - A), via Hessenberg reduction.
FpPoly charpoly(const FpMat& a);

// Evaluate f at a square matrix.
FpMat eval_poly(const FpPoly& f, const FpMat& a);

} // namespace latmid
