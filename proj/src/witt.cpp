#include "latmid/witt.hpp"

namespace latmid {

std::string WittClass::str() const {
    if (is_zero()) return "0";
    std::string s = "(rank " + std::to_string(rank_parity) + " mod 2, disc " + std::to_string(disc) + ")";
    return s;
}

WittClass witt_class_k(const DiagFormFp& d) {
    if (d.p == 2) throw EvenResidueChar("witt_class_k: residue characteristic 2");
    if (!is_prime(d.p)) throw InvalidArgument("witt_class_k: p not prime");
    long r = static_cast<long>(d.entries.size());
    long prod = 1;
    for (long e : d.entries) {
        long v = ((e % d.p) + d.p) % d.p;
        if (v == 0) throw InvalidArgument("witt_class_k: zero diagonal entry");
        prod = prod * v % d.p;
    }
    // signed discriminant (-1)^{r(r-1)/2} * det
    if ((r * (r - 1) / 2) % 2 == 1) prod = (d.p - prod) % d.p;
    WittClass w;
    w.p = d.p;
    w.rank_parity = static_cast<int>(r % 2);
    if (r % 2 == 0 && (r == 0 || square_class(prod, d.p) == 1))
        w.disc = 0; // hyperbolic
    else
        w.disc = square_class(prod, d.p);
    return w;
}

DiagFormFp witt_representative(const WittClass& w) {
    DiagFormFp d;
    d.p = w.p;
    if (w.is_zero()) return d;
    if (w.rank_parity == 1) {
        d.entries = {w.disc};
    } else {
        long s = smallest_nonsquare(w.p);
        d.entries = {1, (w.p - s) % w.p}; // ⟨1, -s⟩: anisotropic, disc± = s
    }
    return d;
}

WittClass witt_add(const WittClass& a, const WittClass& b) {
    if (a.p != b.p) throw InvalidArgument("witt_add: mixed residue fields");
    DiagFormFp ra = witt_representative(a), rb = witt_representative(b);
    for (long e : rb.entries) ra.entries.push_back(e);
    return witt_class_k(ra);
}

WittClass witt_scale(const WittClass& w, long c) {
    DiagFormFp r = witt_representative(w);
    for (long& e : r.entries) e = e * (((c % w.p) + w.p) % w.p) % w.p;
    return witt_class_k(r);
}

std::pair<WittClass, WittClass> springer_residues(const DiagFormK& d, const ValConfig& cfg,
                                                  const Rat& uniformizer_unit) {
    if (!cfg.odd()) throw EvenResidueChar("springer_residues: residue characteristic 2");
    if (valuation(uniformizer_unit, cfg) != Val::of(0))
        throw InvalidArgument("springer_residues: uniformizer unit must have valuation 0");
    DiagFormFp d1, d2;
    d1.p = d2.p = cfg.p;
    for (const Rat& x : d.entries) {
        if (x == 0) throw DegenerateForm("springer_residues: zero diagonal entry");
        long e = valuation(x, cfg).value();
        // x = w · (unit·p)^e with w a unit of R
        Rat w = x / rat_pow(cfg.p, e);
        for (long k = 0; k < (e < 0 ? -e : e); ++k) {
            if (e > 0)
                w /= uniformizer_unit;
            else
                w *= uniformizer_unit;
        }
        long wbar = residue(w, cfg).value();
        if (((e % 2) + 2) % 2 == 0)
            d1.entries.push_back(wbar);
        else
            d2.entries.push_back(wbar);
    }
    return {witt_class_k(d1), witt_class_k(d2)};
}

CompatibleDiag diagonalize_compatible(const GramForm& b, const Lattice& m) {
    if (b.epsilon != 1) throw WrongEpsilon("diagonalize_compatible: form must be symmetric");
    ValConfig cfg(m.p());
    if (!cfg.odd()) throw EvenResidueChar("diagonalize_compatible: residue characteristic 2");
    if (b.dim() != m.dim()) throw DimensionMismatch("diagonalize_compatible: dimensions differ");

    CompatibleDiag out;
    size_t n = m.dim();
    out.basis = RatMat(n, n);
    RatMat cur = m.basis(); // columns are an R-basis of the current lattice
    size_t placed = 0;
    while (cur.cols() > 0) {
        size_t k = cur.cols();
        RatMat g = cur.transpose() * b.mat * cur;
        Val m0 = Val::infinity();
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i; j < k; ++j) m0 = val_min(m0, valuation(g.at(i, j), cfg));
        if (m0.is_infinity())
            throw DegenerateForm("diagonalize_compatible: restricted form vanishes");
        // pick x realizing the minimum: a diagonal entry when possible,
        // else e_i + e_j for the lowest off-diagonal minimizer
        size_t slot = k;
        RatMat x(n, 1);
        for (size_t i = 0; i < k; ++i)
            if (valuation(g.at(i, i), cfg) == m0) {
                slot = i;
                x = cur.col(i);
                break;
            }
        if (slot == k) {
            size_t bi = 0, bj = 0;
            bool found = false;
            for (size_t i = 0; i < k && !found; ++i)
                for (size_t j = i + 1; j < k && !found; ++j)
                    if (valuation(g.at(i, j), cfg) == m0) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
            x = cur.col(bi) + cur.col(bj);
            slot = bj;
        }
        Rat qx = (x.transpose() * b.mat * x).at(0, 0);
        if (valuation(qx, cfg) != m0)
            throw DegenerateForm("diagonalize_compatible: pivot lost the minimal valuation");
        out.diag.entries.push_back(qx);
        for (size_t i = 0; i < n; ++i) out.basis.at(i, placed) = x.at(i, 0);
        ++placed;
        // split off Kx: y ↦ y - (B(x,y)/q(x))·x, drop the pivot slot
        RatMat bx = b.mat * x; // column, B(x, ·) against it
        RatMat next(n, k - 1);
        size_t col = 0;
        for (size_t j = 0; j < k; ++j) {
            if (j == slot) continue;
            Rat ell(0);
            for (size_t i = 0; i < n; ++i) ell += bx.at(i, 0) * cur.at(i, j);
            ell /= qx;
            for (size_t i = 0; i < n; ++i) next.at(i, col) = cur.at(i, j) - ell * x.at(i, 0);
            ++col;
        }
        cur = next;
    }
    return out;
}

DiagFormFp fp_diagonalize(const FpGram& g) {
    long p = g.p();
    if (p == 2) throw EvenResidueChar("fp_diagonalize: residue characteristic 2");
    if (g.epsilon != 1) throw WrongEpsilon("fp_diagonalize: form must be symmetric");
    if (!g.nondegenerate()) throw DegenerateForm("fp_diagonalize: degenerate form");
    FpMat a = g.mat;
    DiagFormFp out;
    out.p = p;
    size_t n = a.rows();
    auto mulp = [p](long x, long y) {
        return static_cast<long>(static_cast<unsigned long long>(x) * static_cast<unsigned long long>(y) %
                                 static_cast<unsigned long long>(p));
    };
    auto swap_basis = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t j = 0; j < n; ++j) {
            long t = a.at(x, j);
            a.set(x, j, a.at(y, j));
            a.set(y, j, t);
        }
        for (size_t i = 0; i < n; ++i) {
            long t = a.at(i, x);
            a.set(i, x, a.at(i, y));
            a.set(i, y, t);
        }
    };
    for (size_t lo = 0; lo < n; ++lo) {
        size_t pivot = n;
        for (size_t i = lo; i < n; ++i)
            if (a.at(i, i) != 0) {
                pivot = i;
                break;
            }
        if (pivot == n) {
            // all diagonal zero on the live block: b(e_i + e_j) = 2·a_ij != 0
            size_t bi = n, bj = n;
            for (size_t i = lo; i < n && bi == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (a.at(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == n) throw DegenerateForm("fp_diagonalize: degenerate block");
            for (size_t r = 0; r < n; ++r) a.set(r, bi, a.at(r, bi) + a.at(r, bj));
            for (size_t c = 0; c < n; ++c) a.set(bi, c, a.at(bi, c) + a.at(bj, c));
            pivot = bi;
        }
        swap_basis(lo, pivot);
        long d = a.at(lo, lo);
        out.entries.push_back(d);
        long dinv = mod_inv(d, p);
        for (size_t j = lo + 1; j < n; ++j) {
            long f = mulp(a.at(lo, j), dinv);
            if (f == 0) continue;
            for (size_t r = 0; r < n; ++r) a.set(r, j, a.at(r, j) - mulp(f, a.at(r, lo)));
            for (size_t c = 0; c < n; ++c) a.set(j, c, a.at(j, c) - mulp(f, a.at(lo, c)));
        }
    }
    return out;
}

WittClass witt_of_fpgram(const FpGram& g) { return witt_class_k(fp_diagonalize(g)); }

bool verify_springer_vs_residuals(const Lattice& l, const GramForm& b) {
    if (b.epsilon != 1) throw WrongEpsilon("verify_springer_vs_residuals: symmetric case only");
    ValConfig cfg(l.p());
    if (!cfg.odd()) throw EvenResidueChar("verify_springer_vs_residuals: residue characteristic 2");
    if (!is_almost_self_dual(l, b))
        throw NotAlmostSelfDual("verify_springer_vs_residuals: lattice not almost self-dual");
    CompatibleDiag cd = diagonalize_compatible(b, l);
    auto [d1, d2] = springer_residues(cd.diag, cfg);
    ResidualForms rf = residual_forms(l, b);
    return d1 == witt_of_fpgram(rf.b1) && d2 == witt_of_fpgram(rf.b2);
}

} // namespace latmid
