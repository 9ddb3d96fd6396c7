#pragma once

#include "latmid/dvr.hpp"
#include "latmid/qmat.hpp"

#include <vector>

namespace latmid {

// Canonical representative of x + p^e R: the p-adic expansion of x truncated
// below exponent e, exact in Q. Zero when v(x) >= e.
Rat padic_truncate(const Rat& x, long e, long p);

Val min_valuation(const RatMat& a, long p);
bool entries_in_r(const RatMat& a, long p);

struct ColEchelon {
    RatMat m;                       // echelonized columns
    RatMat u;                       // GL(R) column transform, input * u == m (if requested)
    std::vector<size_t> pivot_rows; // row of each pivot column 0..rank-1
    std::vector<long> pivot_exps;   // pivot = p^e
    size_t rank = 0;
};

// Column echelon form over the valuation ring R: all column operations lie in
// GL_m(R), pivots are exact powers of p chosen by minimal valuation within
// the pivot row (ties: lowest column). With reduce set, entries of earlier
// columns in each pivot row are replaced by their canonical representatives
// mod the pivot; for a square invertible input this is the unique column
// Hermite form over R, so lattices compare by normal form.
ColEchelon col_echelon(const RatMat& a, long p, bool want_transform, bool reduce);

struct DvrSmith {
    RatMat col_basis;             // lies in GL_n(R); input = col_basis * diag(p^e) * W
    std::vector<long> exponents;  // nondecreasing
};

// Smith normal form over R of a square matrix invertible over K. Exponents
// may be negative. Pivoting: minimal valuation, ties by lowest column then row.
DvrSmith dvr_smith(const RatMat& c, long p);

} // namespace latmid
