#include "latmid/lattice.hpp"

#include <algorithm>

namespace latmid {

Lattice::Lattice(RatMat basis, long p) : p_(p), basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols())
        throw DimensionMismatch("Lattice: basis must be square, got " + std::to_string(basis_.rows()) + "x" +
                                std::to_string(basis_.cols()));
    if (!is_prime(p)) throw InvalidArgument("Lattice: p must be prime");
    inv_ = basis_.inverse(); // throws SingularMatrix when not a basis
}

Lattice Lattice::standard(size_t n, long p) { return Lattice(RatMat::identity(n), p); }

Lattice Lattice::diagonal(const std::vector<Rat>& d, long p) { return Lattice(RatMat::diagonal(d), p); }

RatMat Lattice::canonical_basis() const { return col_echelon(basis_, p_, false, true).m; }

Lattice Lattice::scaled(const Rat& c) const {
    if (c == 0) throw InvalidArgument("Lattice::scaled: zero scalar");
    return Lattice(basis_.scaled(c), p_);
}

Lattice Lattice::twist(long a) const { return scaled(rat_pow(p_, -a)); }

Lattice Lattice::apply(const RatMat& g) const { return Lattice(g * basis_, p_); }

bool Lattice::contains(const Lattice& other) const {
    if (p_ != other.p_) throw InvalidArgument("Lattice::contains: mixed primes");
    if (dim() != other.dim()) throw DimensionMismatch("Lattice::contains: dimensions differ");
    return entries_in_r(inv_ * other.basis_, p_);
}

bool Lattice::operator==(const Lattice& other) const {
    if (p_ != other.p_) throw InvalidArgument("Lattice::==: mixed primes");
    if (dim() != other.dim()) throw DimensionMismatch("Lattice::==: dimensions differ");
    RatMat c = inv_ * other.basis_;
    if (!entries_in_r(c, p_)) return false;
    return entries_in_r(c.inverse(), p_);
}

namespace {
void check_pair(const Lattice& l, const Lattice& m, const char* who) {
    if (l.p() != m.p()) throw InvalidArgument(std::string(who) + ": mixed primes");
    if (l.dim() != m.dim()) throw DimensionMismatch(std::string(who) + ": dimensions differ");
}
} // namespace

Lattice lattice_sum(const Lattice& l, const Lattice& m) {
    check_pair(l, m, "lattice_sum");
    size_t n = l.dim();
    if (n == 0) return l;
    ColEchelon e = col_echelon(RatMat::hcat(l.basis(), m.basis()), l.p(), false, false);
    if (e.rank != n) throw SingularMatrix("lattice_sum: rank drop");
    std::vector<size_t> idx(n);
    for (size_t j = 0; j < n; ++j) idx[j] = j;
    return Lattice(e.m.cols_slice(idx), l.p());
}

Lattice lattice_intersection(const Lattice& l, const Lattice& m) {
    check_pair(l, m, "lattice_intersection");
    size_t n = l.dim();
    if (n == 0) return l;
    // x ∈ L∩M  ⟺  x = P a = Q b with a, b ∈ R^n; the saturated R-kernel of
    // [P | -Q] is read off the GL(R) column transform.
    RatMat stacked = RatMat::hcat(l.basis(), m.basis().scaled(Rat(-1)));
    ColEchelon e = col_echelon(stacked, l.p(), true, false);
    if (e.rank != n) throw SingularMatrix("lattice_intersection: unexpected rank");
    std::vector<size_t> ker_cols(n);
    for (size_t j = 0; j < n; ++j) ker_cols[j] = n + j;
    RatMat coeffs = e.u.cols_slice(ker_cols).top_rows(n); // a-halves of the kernel columns
    return Lattice(l.basis() * coeffs, l.p());
}

SplittingCert compatible_splitting(const Lattice& l, const Lattice& m) {
    check_pair(l, m, "compatible_splitting");
    SplittingCert cert;
    size_t n = l.dim();
    if (n == 0) {
        cert.basis = RatMat(0, 0);
        return cert;
    }
    DvrSmith s = dvr_smith(l.basis_inverse() * m.basis(), l.p());
    cert.basis = l.basis() * s.col_basis;
    cert.exponents_l.assign(n, 0);
    cert.exponents_m = s.exponents;
    return cert;
}

Lattice lattice_from_cert(const RatMat& basis, const std::vector<long>& exps, long p) {
    RatMat m = basis;
    for (size_t j = 0; j < m.cols(); ++j) {
        Rat f = rat_pow(p, exps[j]);
        for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) *= f;
    }
    return Lattice(m, p);
}

long codistance(const Lattice& l, const Lattice& m) {
    SplittingCert cert = compatible_splitting(l, m);
    long a = 0;
    for (size_t i = 0; i < cert.exponents_m.size(); ++i) {
        long d = cert.exponents_m[i] - cert.exponents_l[i];
        a = std::max({a, d, -d});
    }
    return a;
}

namespace {

Lattice middle(const Lattice& l, const Lattice& m, long nrange, bool lower) {
    check_pair(l, m, lower ? "middle_lower" : "middle_upper");
    if (l.dim() == 0) return l;
    Lattice acc = lower ? lattice_intersection(l, m) : lattice_sum(l, m); // n = 0 term
    for (long n = 1; n <= nrange; ++n) {
        for (long sgn : {1L, -1L}) {
            long k = sgn * n;
            // p^k L and p^-k M are the twists L(-k), M(k)
            Lattice a = l.twist(-k), b = m.twist(k);
            if (lower)
                acc = lattice_sum(acc, lattice_intersection(a, b));
            else
                acc = lattice_intersection(acc, lattice_sum(a, b));
        }
    }
    return acc;
}

} // namespace

Lattice middle_lower(const Lattice& l, const Lattice& m, long nrange) { return middle(l, m, nrange, true); }
Lattice middle_upper(const Lattice& l, const Lattice& m, long nrange) { return middle(l, m, nrange, false); }

Lattice middle_lower(const Lattice& l, const Lattice& m) {
    return middle_lower(l, m, ceildiv(codistance(l, m), 2));
}

Lattice middle_upper(const Lattice& l, const Lattice& m) {
    return middle_upper(l, m, ceildiv(codistance(l, m), 2));
}

TorsionModule::TorsionModule(std::vector<long> e) : exponents(std::move(e)) {
    for (long x : exponents)
        if (x < 1) throw InvalidArgument("TorsionModule: exponents must be >= 1");
    std::sort(exponents.begin(), exponents.end(), std::greater<long>());
}

std::pair<TorsionModule, TorsionModule> torsion_middles(const TorsionModule& t) {
    std::vector<long> lo, hi;
    for (long m : t.exponents) {
        if (m / 2 > 0) lo.push_back(m / 2);
        if ((m + 1) / 2 > 0) hi.push_back((m + 1) / 2);
    }
    return {TorsionModule(std::move(lo)), TorsionModule(std::move(hi))};
}

TorsionModule quotient_type(const Lattice& big, const Lattice& small) {
    if (!big.contains(small)) throw InvalidArgument("quotient_type: small not contained in big");
    SplittingCert cert = compatible_splitting(big, small);
    std::vector<long> exps;
    for (size_t i = 0; i < cert.exponents_m.size(); ++i) {
        long e = cert.exponents_m[i] - cert.exponents_l[i];
        if (e > 0) exps.push_back(e);
    }
    return TorsionModule(std::move(exps));
}

} // namespace latmid
