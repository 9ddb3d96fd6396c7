#include "latmid/fixtures.hpp"
#include "latmid/isoforms.hpp"
#include "latmid/meataxe.hpp"
#include "latmid/randgen.hpp"
#include "latmid/witt.hpp"

#include <doctest.h>

using namespace latmid;

namespace {

KGModule trivial_module(long p, size_t n) { return KGModule(p, n, {}); }

FormedKGModule hyperbolic_double(const KGModule& e, int eps) {
    KGModule d = direct_sum(e, dual_module(e));
    FpMat h(e.p, 2 * e.dim, 2 * e.dim);
    for (size_t i = 0; i < e.dim; ++i) {
        h.set(i, e.dim + i, 1);
        h.set(e.dim + i, i, eps == 1 ? 1 : e.p - 1);
    }
    return FormedKGModule(std::move(d), FpGram(std::move(h), eps));
}

bool fp_isometric(const FpGram& a, const FpGram& b) {
    if (a.dim() != b.dim() || a.epsilon != b.epsilon) return false;
    if (a.epsilon == -1) return true; // same rank suffices
    return witt_of_fpgram(a) == witt_of_fpgram(b);
}

} // namespace

TEST_CASE("FormedKGModule validates compatibility and nondegeneracy") {
    // swap action preserves the hyperbolic plane
    FpMat swap = FpMat::from_rows(5, {{0, 1}, {1, 0}});
    FpMat hyp = FpMat::from_rows(5, {{0, 1}, {1, 0}});
    CHECK_NOTHROW(FormedKGModule(KGModule(5, 2, {swap}), FpGram(hyp, 1)));
    // a form the generator does not preserve
    FpMat bad = FpMat::from_rows(5, {{1, 0}, {0, 2}});
    CHECK_THROWS_AS(FormedKGModule(KGModule(5, 2, {swap}), FpGram(bad, 1)), IncompatibleForm);
    // degenerate form
    FpMat deg(5, 2, 2);
    deg.set(0, 0, 1);
    CHECK_THROWS_AS(FormedKGModule(trivial_module(5, 2), FpGram(deg, 1)), IncompatibleForm);
    // symmetric case demands odd characteristic
    CHECK_THROWS_AS(FormedKGModule(trivial_module(2, 1), FpGram(FpMat::identity(2, 1), 1)),
                    IncompatibleForm);
}

TEST_CASE("max_isotropic_tower: anisotropic irreducible input keeps S = 0") {
    FormedKGModule f(trivial_module(5, 1), FpGram(FpMat::identity(5, 1), 1));
    IsotropicTower t = max_isotropic_tower(f, 1);
    CHECK(t.s_basis.cols() == 0);
    CHECK(t.x.module.dim == 1);
}

TEST_CASE("max_isotropic_tower: C2 swap with the hyperbolic form has no isotropic simple") {
    // the two simple submodules are the lines (1,1) and (1,-1), with values 2 and -2
    FpMat swap = FpMat::from_rows(5, {{0, 1}, {1, 0}});
    FpMat hyp = FpMat::from_rows(5, {{0, 1}, {1, 0}});
    FormedKGModule f(KGModule(5, 2, {swap}), FpGram(hyp, 1));
    IsotropicTower t = max_isotropic_tower(f, 2);
    CHECK(t.s_basis.cols() == 0);
    CHECK(!has_isotropic_simple(t.x, 3));
}

TEST_CASE("max_isotropic_tower: trivial action on a hyperbolic plane is split by a line") {
    FpMat hyp = FpMat::from_rows(5, {{0, 1}, {1, 0}});
    FormedKGModule f(trivial_module(5, 2), FpGram(hyp, 1));
    IsotropicTower t = max_isotropic_tower(f, 3);
    CHECK(t.s_basis.cols() == 1);
    CHECK(t.x.module.dim == 0);
    // S is really isotropic and invariant
    CHECK((t.s_basis.transpose() * f.form.mat * t.s_basis).is_zero());
}

TEST_CASE("ss_with_form: semisimple anisotropic input comes back isometric") {
    // diag(1, s) over F_7 on two trivial lines: no isotropic vectors
    long s = smallest_nonsquare(7);
    FpMat g(7, 2, 2);
    g.set(0, 0, 1);
    g.set(1, 1, s);
    FormedKGModule f(trivial_module(7, 2), FpGram(g, 1));
    FormedKGModule out = ss_with_form(f, 4);
    CHECK(out.module.dim == 2);
    CHECK(fp_isometric(out.form, f.form));
}

TEST_CASE("ss_with_form: hyperbolic input stays hyperbolic (Witt class zero)") {
    FpMat hyp = FpMat::from_rows(5, {{0, 1}, {1, 0}});
    FormedKGModule f(trivial_module(5, 2), FpGram(hyp, 1));
    FormedKGModule out = ss_with_form(f, 5);
    CHECK(out.module.dim == 2);
    CHECK(witt_of_fpgram(out.form).is_zero());
    CHECK(ss_isomorphic(semisimplify(out.module, 6), semisimplify(f.module, 7)));
}

TEST_CASE("ss_with_form: alternating case preserves rank and alternation") {
    GroupFixture q8 = fixture_groups()[4];
    KGModule e = reduce_mod_pi(q8.rep(), Lattice::standard(4, 3));
    FpMat h(3, 4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            Rat x = q8.invariant_gram.at(i, j);
            h.set(i, j, residue(x, 3).value());
        }
    FormedKGModule f(e, FpGram(h, -1));
    FormedKGModule out = ss_with_form(f, 8);
    CHECK(out.module.dim == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(out.form.mat.at(i, i) == 0);
    CHECK(out.form.nondegenerate());
}

TEST_CASE("ss_with_form on a non-semisimple module: V ⊕ V* with hyperbolic pairing") {
    // C3 over F_3 is indecomposable and not semisimple
    GroupRepK c3 = fixture_groups()[1].rep();
    KGModule v = reduce_mod_pi(c3, Lattice::standard(2, 3));
    FormedKGModule f = hyperbolic_double(v, 1);
    FormedKGModule out = ss_with_form(f, 9);
    CHECK(out.module.dim == 4);
    CHECK(witt_of_fpgram(out.form) == witt_of_fpgram(f.form));
    CHECK(ss_isomorphic(semisimplify(out.module, 10), semisimplify(f.module, 11)));
    // maximality certificate holds for the final tower
    IsotropicTower t = max_isotropic_tower(f, 12);
    CHECK(!has_isotropic_simple(t.x, 13));
    CHECK(t.s_basis.cols() >= 1);
    // alternating flavour of the same module
    FormedKGModule fa = hyperbolic_double(v, -1);
    FormedKGModule outa = ss_with_form(fa, 14);
    CHECK(outa.module.dim == 4);
    CHECK(outa.form.epsilon == -1);
}

TEST_CASE("the quotient E/S_perp is the dual of S (via the form)") {
    GroupRepK c3 = fixture_groups()[1].rep();
    KGModule v = reduce_mod_pi(c3, Lattice::standard(2, 3));
    FormedKGModule f = hyperbolic_double(v, 1);
    IsotropicTower t = max_isotropic_tower(f, 15);
    REQUIRE(t.s_basis.cols() > 0);
    KGModule s_mod = restrict_module(f.module, t.s_basis);
    KGModule quot = quotient_module(f.module, t.s_perp_basis);
    CHECK(ss_isomorphic(semisimplify(quot, 16), semisimplify(dual_module(s_mod), 17)));
    // the paper's identification: S'^ss is the dual of S^ss
    KGModule s_ss = module_of_decomp(semisimplify(s_mod, 18));
    CHECK(ss_isomorphic(semisimplify(dual_module(s_ss), 19), semisimplify(quot, 20)));
}
