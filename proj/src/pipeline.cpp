#include "latmid/pipeline.hpp"

#include "latmid/fixtures.hpp"

namespace latmid {

bool ReductionReport::all_checks() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

namespace {

bool form_compatible(const KGModule& m, const FpMat& gram) {
    for (const FpMat& g : m.generators)
        if (!(g.transpose() * gram * g == gram)) return false;
    return true;
}

bool form_valid(const FormedKGModule& f) {
    if (!f.form.nondegenerate()) return false;
    long p = f.form.p();
    for (size_t i = 0; i < f.form.dim(); ++i)
        for (size_t j = 0; j < f.form.dim(); ++j) {
            long want = f.form.epsilon == 1 ? f.form.mat.at(i, j) : (p - f.form.mat.at(i, j)) % p;
            if (f.form.mat.at(j, i) != want) return false;
        }
    return form_compatible(f.module, f.form.mat);
}

} // namespace

ReductionReport reduce_with_form(const GroupRepK& rep, const GramForm& b, const ValConfig& cfg,
                                 uint64_t seed) {
    return reduce_with_form_from(rep, b, cfg, Lattice::standard(b.dim(), cfg.p), seed);
}

ReductionReport reduce_with_form_from(const GroupRepK& rep, const GramForm& b, const ValConfig& cfg,
                                      const Lattice& m0, uint64_t seed) {
    size_t n = b.dim();
    if (m0.dim() != n) throw DimensionMismatch("reduce_with_form: lattice/form dimensions differ");
    if (m0.p() != cfg.p) throw InvalidArgument("reduce_with_form: lattice prime differs from config");
    for (const RatMat& g : rep.generators)
        if (g.rows() != n || g.cols() != n)
            throw DimensionMismatch("reduce_with_form: generator dimension mismatch");
    if (b.epsilon == 1 && !cfg.odd())
        throw WrongCharacteristic("reduce_with_form: symmetric case requires p odd");
    for (size_t k = 0; k < rep.generators.size(); ++k)
        if (!(rep.generators[k].transpose() * b.mat * rep.generators[k] == b.mat))
            throw NotInvariant("reduce_with_form: generator " + std::to_string(k) +
                               " does not preserve the form");

    ReductionReport r;
    r.p = cfg.p;
    r.epsilon = b.epsilon;
    r.dim = n;
    r.generator_count = rep.generators.size();
    r.orthogonal = b.epsilon == 1;

    r.stable = stable_lattice(rep, m0);
    r.add_check("stable_lattice_stable", is_stable(rep, r.stable));

    Lattice via_middle = asd_via_middle(r.stable, b);
    Lattice via_thompson = asd_thompson(r.stable, b);
    r.add_check("asd_methods_agree", via_middle == via_thompson);
    r.asd = via_middle;
    r.add_check("asd_almost_self_dual", is_almost_self_dual(r.asd, b));
    r.add_check("asd_stable", is_stable(rep, r.asd));

    ResidualForms rf = residual_forms(r.asd, b);
    const RatMat& f = rf.basis_witness.basis;
    RatMat finv = f.inverse();
    std::vector<FpMat> g1, g2;
    for (const RatMat& g : rep.generators) {
        RatMat c = finv * g * f;
        if (!entries_in_r(c, cfg.p))
            throw Error("reduce_with_form: dual lattice not stable in the splitting basis");
        // g f_j ∈ L for e_j = 0 forces the (e=1, e=0) block into pi R; the
        // F1 action on L/pi L' is well-defined exactly because of this
        for (size_t i : rf.idx2)
            for (size_t j : rf.idx1)
                if (valuation(c.at(i, j), cfg) < Val::of(1))
                    throw Error("reduce_with_form: stable lattice violates the splitting filtration");
        FpMat m1k(cfg.p, rf.idx1.size(), rf.idx1.size());
        for (size_t a = 0; a < rf.idx1.size(); ++a)
            for (size_t bcol = 0; bcol < rf.idx1.size(); ++bcol)
                m1k.set(a, bcol, residue(c.at(rf.idx1[a], rf.idx1[bcol]), cfg).value());
        FpMat m2k(cfg.p, rf.idx2.size(), rf.idx2.size());
        for (size_t a = 0; a < rf.idx2.size(); ++a)
            for (size_t bcol = 0; bcol < rf.idx2.size(); ++bcol)
                m2k.set(a, bcol, residue(c.at(rf.idx2[a], rf.idx2[bcol]), cfg).value());
        g1.push_back(std::move(m1k));
        g2.push_back(std::move(m2k));
    }
    KGModule f1(cfg.p, rf.idx1.size(), std::move(g1));
    KGModule f2(cfg.p, rf.idx2.size(), std::move(g2));
    r.add_check("f1_action_preserves_b1", form_compatible(f1, rf.b1.mat));
    r.add_check("f2_action_preserves_b2", form_compatible(f2, rf.b2.mat));

    FormedKGModule ff1(f1, rf.b1);
    FormedKGModule ff2(f2, rf.b2);
    r.e1 = ss_with_form(ff1, seed * 2 + 1);
    r.e2 = ss_with_form(ff2, seed * 2 + 2);
    r.add_check("e1_form_valid", form_valid(r.e1));
    r.add_check("e2_form_valid", form_valid(r.e2));
    r.add_check("e1_matches_f1_ss",
                ss_isomorphic(semisimplify(r.e1.module, seed + 11), semisimplify(f1, seed + 12)));
    r.add_check("e2_matches_f2_ss",
                ss_isomorphic(semisimplify(r.e2.module, seed + 13), semisimplify(f2, seed + 14)));
    r.add_check("vk_dimension", r.e1.module.dim + r.e2.module.dim == n);
    // (5.3.2): V_k = E1 ⊕ E2 as modules
    KGModule vk_direct = direct_sum(r.e1.module, r.e2.module);
    r.add_check("vk_splitting",
                ss_isomorphic(semisimplify(reduce_mod_pi(rep, r.asd), seed + 15),
                              semisimplify(vk_direct, seed + 16)));

    if (r.orthogonal) {
        CompatibleDiag cd = diagonalize_compatible(b, r.asd);
        auto [d1, d2] = springer_residues(cd.diag, cfg);
        r.witt_q1 = d1;
        r.witt_q2 = d2;
        r.witt_total = witt_add(d1, d2);
        r.add_check("springer_matches_residual_1", d1 == witt_of_fpgram(rf.b1));
        r.add_check("springer_matches_residual_2", d2 == witt_of_fpgram(rf.b2));
        r.add_check("witt_e1_matches_q1", witt_of_fpgram(r.e1.form) == d1);
        r.add_check("witt_e2_matches_q2", witt_of_fpgram(r.e2.form) == d2);
        FpGram vk_form(FpMat::block_diag(r.e1.form.mat, r.e2.form.mat), 1);
        r.add_check("witt_vk_equals_residue_sum", witt_of_fpgram(vk_form) == r.witt_total);
    } else {
        bool alternating = true;
        for (size_t i = 0; i < r.e1.form.dim(); ++i)
            if (r.e1.form.mat.at(i, i) != 0) alternating = false;
        for (size_t i = 0; i < r.e2.form.dim(); ++i)
            if (r.e2.form.mat.at(i, i) != 0) alternating = false;
        r.add_check("vk_form_alternating", alternating);
    }
    return r;
}

GramForm symmetrize(const std::vector<RatMat>& generators, const RatMat& b0, int epsilon,
                    size_t max_elements) {
    if (b0.rows() != b0.cols()) throw DimensionMismatch("symmetrize: seed form not square");
    for (size_t i = 0; i < b0.rows(); ++i)
        for (size_t j = 0; j < b0.cols(); ++j)
            if (b0.at(j, i) != Rat(epsilon) * b0.at(i, j))
                throw WrongEpsilon("symmetrize: seed form is not epsilon-symmetric");
    if (generators.empty()) return GramForm(b0, epsilon);
    std::vector<RatMat> elements = enumerate_group(generators, max_elements);
    RatMat acc(b0.rows(), b0.cols());
    for (const RatMat& e : elements) acc = acc + e.transpose() * b0 * e;
    return GramForm(acc, epsilon); // throws DegenerateForm when the average collapses
}

} // namespace latmid
