#include "latmid/forms.hpp"
#include "latmid/randgen.hpp"

#include <doctest.h>

using namespace latmid;

namespace {
Lattice diag(std::vector<Rat> d, long p) { return Lattice::diagonal(d, p); }
GramForm id_form(size_t n) { return GramForm(RatMat::identity(n), 1); }
} // namespace

TEST_CASE("GramForm validation") {
    CHECK_THROWS_AS(GramForm(RatMat::from_rows({{Rat(0), Rat(1)}, {Rat(2), Rat(0)}}), 1), WrongEpsilon);
    CHECK_THROWS_AS(GramForm(RatMat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}), 1), DegenerateForm);
    CHECK_THROWS_AS(GramForm(RatMat::from_rows({{Rat(1), Rat(1)}, {Rat(-1), Rat(0)}}), -1), WrongEpsilon);
    CHECK_NOTHROW(GramForm(RatMat::from_rows({{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}}), -1));
}

TEST_CASE("dual_lattice: examples and involution") {
    GramForm b = id_form(2);
    CHECK(dual_lattice(Lattice::standard(2, 5), b) == Lattice::standard(2, 5));
    CHECK(dual_lattice(diag({Rat(5), Rat(1)}, 5), b) == diag({Rat(1) / 5, Rat(1)}, 5));
    Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 5));
        int eps = (n % 2 == 0 && rng.one_in(2)) ? -1 : 1;
        GramForm f = random_gram(rng, n, eps, 5);
        Lattice l = random_lattice(rng, n, 5);
        CHECK(dual_lattice(dual_lattice(l, f), f) == l);
    }
}

TEST_CASE("duality reverses inclusion and swaps sum with intersection") {
    Rng rng(42);
    for (int i = 0; i < 25; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 4));
        GramForm f = random_gram(rng, n, 1, 3);
        Lattice l = random_lattice(rng, n, 3), m = random_lattice(rng, n, 3);
        Lattice ld = dual_lattice(l, f), md = dual_lattice(m, f);
        if (l.contains(m)) CHECK(md.contains(ld));
        CHECK(dual_lattice(lattice_sum(l, m), f) == lattice_intersection(ld, md));
        CHECK(dual_lattice(lattice_intersection(l, m), f) == lattice_sum(ld, md));
    }
}

TEST_CASE("is_almost_self_dual: examples") {
    Lattice std2 = Lattice::standard(2, 5);
    CHECK(is_almost_self_dual(std2, id_form(2)));
    CHECK(is_almost_self_dual(std2, GramForm(RatMat::diagonal({Rat(5), Rat(1)}), 1)));
    CHECK(!is_almost_self_dual(std2, GramForm(RatMat::diagonal({Rat(25), Rat(1)}), 1)));
}

TEST_CASE("asd_via_middle: examples and th. 3.1.1") {
    GramForm b = id_form(2);
    // already almost self-dual: unchanged
    Lattice std2 = Lattice::standard(2, 5);
    GramForm b51(RatMat::diagonal({Rat(5), Rat(1)}), 1);
    CHECK(asd_via_middle(std2, b51) == std2);
    CHECK(asd_via_middle(diag({Rat(5), Rat(1)}, 5), b) == std2);
    Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 5));
        int eps = (n % 2 == 0 && rng.one_in(2)) ? -1 : 1;
        GramForm f = random_gram(rng, n, eps, 3);
        Lattice l = random_lattice(rng, n, 3);
        Lattice dual = dual_lattice(l, f);
        Lattice asd = middle_lower(l, dual);
        CHECK(asd == asd_via_middle(l, f));
        CHECK(is_almost_self_dual(asd, f));
        CHECK(dual_lattice(asd, f) == middle_upper(l, dual));
    }
}

TEST_CASE("asd_thompson: examples, termination value, agreement") {
    GramForm b = id_form(2);
    CHECK(asd_thompson(Lattice::standard(2, 5), b) == Lattice::standard(2, 5));
    Lattice t = asd_thompson(diag({Rat(25), Rat(1)}, 5), b);
    CHECK(is_almost_self_dual(t, b));
    CHECK(t == asd_via_middle(asd_rescale(diag({Rat(25), Rat(1)}, 5), b), b));
    Rng rng(44);
    for (int i = 0; i < 30; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 5));
        int eps = (n % 2 == 0 && rng.one_in(2)) ? -1 : 1;
        GramForm f = random_gram(rng, n, eps, 7);
        Lattice l = random_lattice(rng, n, 7);
        Lattice th = asd_thompson(l, f);
        CHECK(is_almost_self_dual(th, f));
        CHECK(th == asd_via_middle(asd_rescale(l, f), f));
    }
}

TEST_CASE("residual_forms: worked examples") {
    Lattice std2 = Lattice::standard(2, 5);
    ResidualForms a = residual_forms(std2, id_form(2));
    CHECK(a.b1.dim() == 2);
    CHECK(a.b2.dim() == 0);
    CHECK(a.b1.mat == FpMat::identity(5, 2));

    ResidualForms c = residual_forms(std2, GramForm(RatMat::diagonal({Rat(5), Rat(1)}), 1));
    CHECK(c.b1.dim() == 1);
    CHECK(c.b2.dim() == 1);
    CHECK(c.b1.mat.at(0, 0) == 1);
    CHECK(c.b2.mat.at(0, 0) == 1);
    CHECK(c.b1.dim() + c.b2.dim() == 2);

    CHECK_THROWS_AS(residual_forms(std2, GramForm(RatMat::diagonal({Rat(25), Rat(1)}), 1)),
                    NotAlmostSelfDual);
}

TEST_CASE("p = 2 is accepted by lattice-theoretic and alternating operations") {
    Rng rng(46);
    for (int i = 0; i < 10; ++i) {
        Lattice l = random_lattice(rng, 2, 2, -2, 2), m = random_lattice(rng, 2, 2, -2, 2);
        Lattice ml = middle_lower(l, m), mu = middle_upper(l, m);
        CHECK(mu.contains(ml));
        CHECK(ml.contains(mu.twist(-1)));
        GramForm f = random_gram(rng, 2, -1, 2);
        Lattice asd = asd_via_middle(l, f);
        CHECK(is_almost_self_dual(asd, f));
        CHECK(asd_thompson(l, f) == asd);
        ResidualForms rf = residual_forms(asd, f);
        CHECK(rf.b1.dim() + rf.b2.dim() == 2);
    }
}

TEST_CASE("residual_forms: nondegenerate, epsilon-symmetric, even dims in the alternating case") {
    Rng rng(45);
    for (int i = 0; i < 30; ++i) {
        size_t n = 2 * static_cast<size_t>(rng.range(1, 2));
        int eps = rng.one_in(2) ? -1 : 1;
        GramForm f = random_gram(rng, n, eps, 3);
        Lattice l = asd_via_middle(random_lattice(rng, n, 3), f);
        ResidualForms rf = residual_forms(l, f);
        CHECK(rf.b1.dim() + rf.b2.dim() == n);
        CHECK(rf.b1.nondegenerate());
        CHECK(rf.b2.nondegenerate());
        if (eps == -1) {
            CHECK(rf.b1.dim() % 2 == 0);
            CHECK(rf.b2.dim() % 2 == 0);
        }
        // witness reconstructs L and L'
        CHECK(lattice_from_cert(rf.basis_witness.basis, rf.basis_witness.exponents_l, 3) == l);
        CHECK(lattice_from_cert(rf.basis_witness.basis, rf.basis_witness.exponents_m, 3) ==
              dual_lattice(l, f));
    }
}
