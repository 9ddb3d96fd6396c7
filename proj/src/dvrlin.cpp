#include "latmid/dvrlin.hpp"

namespace latmid {

Rat padic_truncate(const Rat& x, long e, long p) {
    if (x == 0) return Rat(0);
    long vx = valuation(x, p).value();
    if (vx >= e) return Rat(0);
    // x = p^vx * a/b with a, b prime to p; representative = p^vx * (a b^{-1} mod p^{e-vx}).
    Rat unit = x / rat_pow(p, vx);
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e - vx));
    Int den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), unit.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw InvalidArgument("padic_truncate: denominator not prime to p");
    Int rep = unit.get_num() * den_inv;
    mpz_fdiv_r(rep.get_mpz_t(), rep.get_mpz_t(), modulus.get_mpz_t());
    return Rat(rep) * rat_pow(p, vx);
}

Val min_valuation(const RatMat& a, long p) {
    Val m = Val::infinity();
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m = val_min(m, valuation(a.at(i, j), p));
    return m;
}

bool entries_in_r(const RatMat& a, long p) {
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (valuation(a.at(i, j), p) < Val::of(0)) return false;
    return true;
}

ColEchelon col_echelon(const RatMat& a, long p, bool want_transform, bool reduce) {
    ColEchelon res;
    res.m = a;
    size_t n = a.rows(), m = a.cols();
    if (want_transform) res.u = RatMat::identity(m);
    RatMat& M = res.m;
    RatMat& U = res.u;

    auto add_col = [&](size_t dst, size_t src, const Rat& c) {
        for (size_t i = 0; i < n; ++i) M.at(i, dst) += c * M.at(i, src);
        if (want_transform)
            for (size_t i = 0; i < m; ++i) U.at(i, dst) += c * U.at(i, src);
    };
    auto swap_cols = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t i = 0; i < n; ++i) std::swap(M.at(i, x), M.at(i, y));
        if (want_transform)
            for (size_t i = 0; i < m; ++i) std::swap(U.at(i, x), U.at(i, y));
    };
    auto scale_col = [&](size_t j, const Rat& c) {
        for (size_t i = 0; i < n; ++i) M.at(i, j) *= c;
        if (want_transform)
            for (size_t i = 0; i < m; ++i) U.at(i, j) *= c;
    };

    size_t pc = 0; // next pivot column
    for (size_t row = 0; row < n && pc < m; ++row) {
        Val best = Val::infinity();
        size_t best_j = pc;
        for (size_t j = pc; j < m; ++j) {
            Val v = valuation(M.at(row, j), p);
            if (v < best) {
                best = v;
                best_j = j;
            }
        }
        if (best.is_infinity()) continue; // no pivot in this row
        swap_cols(pc, best_j);
        long e = best.value();
        Rat pe = rat_pow(p, e);
        scale_col(pc, pe / M.at(row, pc)); // pivot becomes exactly p^e
        for (size_t j = pc + 1; j < m; ++j) {
            if (M.at(row, j) == 0) continue;
            add_col(j, pc, -(M.at(row, j) / pe));
        }
        if (reduce) {
            for (size_t j = 0; j < pc; ++j) {
                if (M.at(row, j) == 0) continue;
                Rat rep = padic_truncate(M.at(row, j), e, p);
                if (rep != M.at(row, j)) add_col(j, pc, (rep - M.at(row, j)) / pe);
            }
        }
        res.pivot_rows.push_back(row);
        res.pivot_exps.push_back(e);
        ++pc;
    }
    res.rank = pc;
    return res;
}

DvrSmith dvr_smith(const RatMat& c, long p) {
    if (c.rows() != c.cols()) throw DimensionMismatch("dvr_smith: not square");
    size_t n = c.rows();
    RatMat M = c;
    RatMat Uinv = RatMat::identity(n); // accumulates inverses of the row operations
    DvrSmith res;

    for (size_t k = 0; k < n; ++k) {
        Val best = Val::infinity();
        size_t bi = k, bj = k;
        for (size_t j = k; j < n; ++j)
            for (size_t i = k; i < n; ++i) {
                Val v = valuation(M.at(i, j), p);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best.is_infinity()) throw SingularMatrix("dvr_smith: matrix singular over K");
        // move pivot to (k, k)
        if (bi != k) {
            for (size_t j = 0; j < n; ++j) std::swap(M.at(bi, j), M.at(k, j));
            for (size_t i = 0; i < n; ++i) std::swap(Uinv.at(i, bi), Uinv.at(i, k));
        }
        if (bj != k)
            for (size_t i = 0; i < n; ++i) std::swap(M.at(i, bj), M.at(i, k));
        long e = best.value();
        Rat pe = rat_pow(p, e);
        // normalize the pivot row so the pivot is exactly p^e
        Rat u = M.at(k, k) / pe;
        for (size_t j = 0; j < n; ++j) M.at(k, j) /= u;
        for (size_t i = 0; i < n; ++i) Uinv.at(i, k) *= u;
        // clear column k below the pivot (row ops), then row k to the right (col ops)
        for (size_t i = k + 1; i < n; ++i) {
            if (M.at(i, k) == 0) continue;
            Rat f = M.at(i, k) / pe;
            for (size_t j = 0; j < n; ++j) M.at(i, j) -= f * M.at(k, j);
            for (size_t r = 0; r < n; ++r) Uinv.at(r, k) += f * Uinv.at(r, i);
        }
        for (size_t j = k + 1; j < n; ++j) {
            if (M.at(k, j) == 0) continue;
            Rat f = M.at(k, j) / pe;
            for (size_t i = 0; i < n; ++i) M.at(i, j) -= f * M.at(i, k);
        }
        res.exponents.push_back(e);
    }
    res.col_basis = Uinv;
    return res;
}

} // namespace latmid
