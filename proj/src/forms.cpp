#include "latmid/forms.hpp"

namespace latmid {

GramForm::GramForm(RatMat m, int eps) : mat(std::move(m)), epsilon(eps) {
    if (eps != 1 && eps != -1) throw WrongEpsilon("GramForm: epsilon must be +1 or -1");
    if (mat.rows() != mat.cols()) throw DimensionMismatch("GramForm: matrix not square");
    for (size_t i = 0; i < mat.rows(); ++i) {
        for (size_t j = 0; j < mat.cols(); ++j)
            if (mat.at(j, i) != Rat(eps) * mat.at(i, j))
                throw WrongEpsilon("GramForm: matrix is not epsilon-symmetric at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
        if (eps == -1 && mat.at(i, i) != 0)
            throw WrongEpsilon("GramForm: alternating form with nonzero diagonal");
    }
    if (mat.rows() > 0 && mat.det() == 0) throw DegenerateForm("GramForm: determinant is zero");
}

FpGram::FpGram(FpMat m, int eps) : mat(std::move(m)), epsilon(eps) {
    if (eps != 1 && eps != -1) throw WrongEpsilon("FpGram: epsilon must be +1 or -1");
    if (mat.rows() != mat.cols()) throw DimensionMismatch("FpGram: matrix not square");
    long p = mat.p();
    for (size_t i = 0; i < mat.rows(); ++i) {
        for (size_t j = 0; j < mat.cols(); ++j) {
            long want = eps == 1 ? mat.at(i, j) : (p - mat.at(i, j)) % p;
            if (mat.at(j, i) != want) throw WrongEpsilon("FpGram: matrix is not epsilon-symmetric");
        }
        if (eps == -1 && mat.at(i, i) != 0) throw WrongEpsilon("FpGram: alternating form with nonzero diagonal");
    }
}

namespace {
RatMat gram_of(const Lattice& l, const GramForm& b) {
    return l.basis().transpose() * b.mat * l.basis();
}
} // namespace

Lattice dual_lattice(const Lattice& l, const GramForm& b) {
    if (l.dim() != b.dim()) throw DimensionMismatch("dual_lattice: dimensions differ");
    if (l.dim() == 0) return l;
    RatMat g = gram_of(l, b);
    RatMat dual = l.basis() * g.transpose().inverse();
    if (testing::dual_lattice_sign_fault && l.dim() > 1) dual.at(0, 1) = -dual.at(0, 1);
    return Lattice(dual, l.p());
}

bool is_almost_self_dual(const Lattice& l, const GramForm& b) {
    Lattice dual = dual_lattice(l, b);
    return dual.contains(l) && l.contains(dual.twist(-1));
}

Lattice asd_via_middle(const Lattice& l, const GramForm& b) {
    return middle_lower(l, dual_lattice(l, b));
}

Lattice asd_rescale(const Lattice& l, const GramForm& b) {
    if (l.dim() == 0) return l;
    Val mu = min_valuation(gram_of(l, b), l.p());
    if (mu.is_infinity()) throw DegenerateForm("asd_rescale: zero Gram matrix");
    long t = ceildiv(-mu.value(), 2);
    return l.twist(-t);
}

Lattice asd_thompson(const Lattice& l0, const GramForm& b) {
    Lattice l = asd_rescale(l0, b);
    if (l.dim() == 0) return l;
    long last_m = -1;
    for (;;) {
        Lattice dual = dual_lattice(l, b);
        if (!dual.contains(l)) throw NotAlmostSelfDual("asd_thompson: iteration left L ⊆ L'");
        // minimal m >= 0 with p^m L' ⊆ L
        SplittingCert cert = compatible_splitting(l, dual);
        long m = 0;
        for (long e : cert.exponents_m) m = std::max(m, -e);
        if (m <= 1) return l;
        if (last_m >= 0 && m >= last_m)
            throw Error("asd_thompson: m failed to decrease, iteration would not terminate");
        last_m = m;
        l = lattice_sum(dual.twist(-(m - 1)), l);
    }
}

ResidualForms residual_forms(const Lattice& l, const GramForm& b) {
    if (!is_almost_self_dual(l, b))
        throw NotAlmostSelfDual("residual_forms: lattice is not almost self-dual");
    long p = l.p();
    size_t n = l.dim();
    Lattice dual = dual_lattice(l, b);
    // L = ⊕ R x_i, L' = ⊕ p^{a_i} R x_i with a_i ∈ {-1, 0}; set f_i = p^{a_i} x_i
    SplittingCert cert = compatible_splitting(l, dual);
    ResidualForms res;
    RatMat f(n, n);
    std::vector<long> e(n);
    for (size_t j = 0; j < n; ++j) {
        long a = cert.exponents_m[j];
        if (a != 0 && a != -1)
            throw NotAlmostSelfDual("residual_forms: splitting exponent " + std::to_string(a) + " outside {-1,0}");
        e[j] = -a;
        Rat scale = rat_pow(p, a);
        for (size_t i = 0; i < n; ++i) f.at(i, j) = cert.basis.at(i, j) * scale;
    }
    res.basis_witness.basis = f;
    res.basis_witness.exponents_l = e;
    res.basis_witness.exponents_m.assign(n, 0);
    for (size_t j = 0; j < n; ++j) (e[j] == 0 ? res.idx1 : res.idx2).push_back(j);

    RatMat gram = f.transpose() * b.mat * f; // B(f_i, f_j)
    // soundness: B on L = {p^{e_i} f_i} has entries in R
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (valuation(gram.at(i, j) * rat_pow(p, e[i] + e[j]), p) < Val::of(0))
                throw DegenerateResidual("residual_forms: B not integral on L in the splitting basis");

    FpMat m1(p, res.idx1.size(), res.idx1.size());
    for (size_t a = 0; a < res.idx1.size(); ++a)
        for (size_t c = 0; c < res.idx1.size(); ++c)
            m1.set(a, c, residue(gram.at(res.idx1[a], res.idx1[c]), p).value());
    FpMat m2(p, res.idx2.size(), res.idx2.size());
    for (size_t a = 0; a < res.idx2.size(); ++a)
        for (size_t c = 0; c < res.idx2.size(); ++c)
            m2.set(a, c, residue(gram.at(res.idx2[a], res.idx2[c]) * p, p).value());
    res.b1 = FpGram(std::move(m1), b.epsilon);
    res.b2 = FpGram(std::move(m2), b.epsilon);
    if (!res.b1.nondegenerate()) throw DegenerateResidual("residual_forms: b1 degenerate");
    if (!res.b2.nondegenerate()) throw DegenerateResidual("residual_forms: b2 degenerate");
    return res;
}

} // namespace latmid
