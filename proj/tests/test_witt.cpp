#include "latmid/oracles.hpp"
#include "latmid/randgen.hpp"
#include "latmid/witt.hpp"

#include <doctest.h>

using namespace latmid;

TEST_CASE("witt_class_k: examples") {
    CHECK(witt_class_k({5, {1, -1}}).is_zero());
    WittClass one = witt_class_k({5, {1}});
    CHECK(one.rank_parity == 1);
    CHECK(one.disc == 1);
    // -1 = 2^2 over F_5, so <1,1> is isotropic, hence hyperbolic
    CHECK(witt_class_k({5, {1, 1}}).is_zero());
    CHECK(!witt_class_k({3, {1, 1}}).is_zero()); // -1 is not a square mod 3
    CHECK_THROWS_AS(witt_class_k({2, {1}}), EvenResidueChar);
}

TEST_CASE("witt_class_k agrees with the anisotropic-kernel oracle, exhaustively") {
    for (long p : {3L, 5L, 7L}) {
        long s = smallest_nonsquare(p);
        for (int rank = 0; rank <= 4; ++rank)
            for (int mask = 0; mask < (1 << rank); ++mask) {
                DiagFormFp d;
                d.p = p;
                for (int k = 0; k < rank; ++k) d.entries.push_back((mask >> k) & 1 ? s : 1);
                CHECK(witt_class_k(d) == witt_class_bruteforce(d));
            }
    }
}

TEST_CASE("witt_add: group structure") {
    for (long p : {3L, 5L, 7L}) {
        long s = smallest_nonsquare(p);
        WittClass zero = witt_class_k({p, {}});
        WittClass one = witt_class_k({p, {1}});
        WittClass ns = witt_class_k({p, {s}});
        CHECK(witt_add(zero, one) == one);
        CHECK(witt_add(one, ns) == witt_class_k({p, {1, s}}));
        // every class plus itself twice more gives 4x = 0 (W(F_p) has exponent 4)
        WittClass x = witt_add(one, one);
        CHECK(witt_add(x, x).is_zero());
    }
}

TEST_CASE("springer_residues: one-dimensional values (3.3.1)") {
    ValConfig cfg(5);
    // <u> with v(u) = 0
    auto [a1, a2] = springer_residues({{Rat(2)}}, cfg);
    CHECK(a1 == witt_class_k({5, {2}}));
    CHECK(a2.is_zero());
    // <u pi>
    auto [b1, b2] = springer_residues({{Rat(10)}}, cfg);
    CHECK(b1.is_zero());
    CHECK(b2 == witt_class_k({5, {2}}));
    // hyperbolic plane maps to (0, 0)
    auto [c1, c2] = springer_residues({{Rat(1), Rat(-1)}}, cfg);
    CHECK(c1.is_zero());
    CHECK(c2.is_zero());
    // the pair for <2, 3/2> over Q_3: residues <2>, <2>
    ValConfig cfg3(3);
    auto [d1, d2] = springer_residues({{Rat(2), Rat(3) / 2}}, cfg3);
    CHECK(d1 == witt_class_k({3, {2}}));
    CHECK(d2 == witt_class_k({3, {2}}));
}

TEST_CASE("springer_residues: additivity and square-scaling invariance") {
    Rng rng(51);
    ValConfig cfg(7);
    for (int i = 0; i < 40; ++i) {
        DiagFormK d1, d2;
        for (int k = 0, n = static_cast<int>(rng.range(1, 3)); k < n; ++k)
            d1.entries.push_back(random_scalar(rng, 7, -2, 2, 0));
        for (int k = 0, n = static_cast<int>(rng.range(1, 3)); k < n; ++k)
            d2.entries.push_back(random_scalar(rng, 7, -2, 2, 0));
        DiagFormK joint = d1;
        for (const Rat& e : d2.entries) joint.entries.push_back(e);
        auto [j1, j2] = springer_residues(joint, cfg);
        auto [x1, x2] = springer_residues(d1, cfg);
        auto [y1, y2] = springer_residues(d2, cfg);
        CHECK(j1 == witt_add(x1, y1));
        CHECK(j2 == witt_add(x2, y2));
        // scaling an entry by a square of K changes nothing
        DiagFormK scaled = d1;
        Rat c = random_scalar(rng, 7, -2, 2, 0);
        scaled.entries[0] *= c * c;
        auto [s1, s2] = springer_residues(scaled, cfg);
        CHECK(s1 == x1);
        CHECK(s2 == x2);
    }
}

TEST_CASE("springer_residues: dependence of d2 on the uniformizer") {
    ValConfig cfg(5);
    Rat u(2); // 2 is a non-square mod 5
    // on <w pi>, changing pi to u pi twists d2 by <u-bar>
    for (long w : {1L, 2L, 3L, 4L}) {
        auto [a1, a2] = springer_residues({{Rat(w) * 5}}, cfg);
        auto [b1, b2] = springer_residues({{Rat(w) * 5}}, cfg, u);
        CHECK(a1 == b1);
        CHECK(b2 == witt_scale(a2, 2));
        CHECK(!(b2 == a2)); // the twist by a non-square moves every odd-rank class
    }
    // d1 never depends on the uniformizer
    auto [c1, c2] = springer_residues({{Rat(3)}}, cfg, u);
    CHECK(c1 == witt_class_k({5, {3}}));
    CHECK(c2.is_zero());
}

TEST_CASE("diagonalize_compatible: examples") {
    // already diagonal
    GramForm d(RatMat::diagonal({Rat(5), Rat(1)}), 1);
    CompatibleDiag cd = diagonalize_compatible(d, Lattice::standard(2, 5));
    REQUIRE(cd.diag.entries.size() == 2);
    CHECK(cd.diag.entries[0] == Rat(1)); // minimal valuation entry first
    CHECK(cd.diag.entries[1] == Rat(5));
    // hyperbolic Gram: both values unit, residue discriminant = class of -1
    GramForm h(RatMat::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}), 1);
    CompatibleDiag ch = diagonalize_compatible(h, Lattice::standard(2, 5));
    ValConfig cfg(5);
    REQUIRE(ch.diag.entries.size() == 2);
    CHECK(valuation(ch.diag.entries[0], cfg) == Val::of(0));
    CHECK(valuation(ch.diag.entries[1], cfg) == Val::of(0));
    Rat disc = ch.diag.entries[0] * ch.diag.entries[1];
    CHECK(square_class(residue(disc, cfg).value(), 5) == square_class(5 - 1, 5));
}

TEST_CASE("diagonalize_compatible: postconditions on random input") {
    Rng rng(52);
    for (int i = 0; i < 30; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 5));
        long p = i % 2 == 0 ? 3 : 5;
        GramForm b = random_gram(rng, n, 1, p);
        Lattice m = random_lattice(rng, n, p);
        CompatibleDiag cd = diagonalize_compatible(b, m);
        // Gram is diagonal with the stated entries
        RatMat g = cd.basis.transpose() * b.mat * cd.basis;
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                if (r == c)
                    CHECK(g.at(r, c) == cd.diag.entries[r]);
                else
                    CHECK(g.at(r, c) == Rat(0));
            }
        // splitting is compatible with M: M = ⊕ (M ∩ K x_i)
        std::vector<long> u(n);
        RatMat coords = m.basis_inverse() * cd.basis;
        for (size_t j = 0; j < n; ++j) {
            Val best = Val::infinity();
            for (size_t r = 0; r < n; ++r) best = val_min(best, valuation(coords.at(r, j), p));
            u[j] = -best.value();
        }
        CHECK(lattice_from_cert(cd.basis, u, p) == m);
    }
    CHECK_THROWS_AS(
        diagonalize_compatible(GramForm(RatMat::from_rows({{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}}), -1),
                               Lattice::standard(2, 5)),
        WrongEpsilon);
}

TEST_CASE("verify_springer_vs_residuals: worked examples and random pairs (th. 3.3.2)") {
    GramForm id2(RatMat::identity(2), 1);
    GramForm b51(RatMat::diagonal({Rat(5), Rat(1)}), 1);
    Lattice std2 = Lattice::standard(2, 5);
    CHECK(verify_springer_vs_residuals(std2, id2));
    CHECK(verify_springer_vs_residuals(std2, b51));
    Rng rng(53);
    for (int i = 0; i < 25; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 5));
        long p = i % 2 == 0 ? 3 : 7;
        GramForm b = random_gram(rng, n, 1, p);
        Lattice l = asd_via_middle(random_lattice(rng, n, p), b);
        CHECK(verify_springer_vs_residuals(l, b));
    }
}

TEST_CASE("cor. 3.3.4: residual Witt classes do not depend on the almost-self-dual lattice") {
    Rng rng(54);
    for (int i = 0; i < 20; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 4));
        long p = 5;
        GramForm b = random_gram(rng, n, 1, p);
        Lattice l1 = asd_via_middle(random_lattice(rng, n, p), b);
        Lattice l2 = asd_via_middle(random_lattice(rng, n, p), b);
        Lattice l3 = asd_thompson(random_lattice(rng, n, p), b);
        ResidualForms r1 = residual_forms(l1, b);
        ResidualForms r2 = residual_forms(l2, b);
        ResidualForms r3 = residual_forms(l3, b);
        CHECK(witt_of_fpgram(r1.b1) == witt_of_fpgram(r2.b1));
        CHECK(witt_of_fpgram(r1.b2) == witt_of_fpgram(r2.b2));
        CHECK(witt_of_fpgram(r1.b1) == witt_of_fpgram(r3.b1));
        CHECK(witt_of_fpgram(r1.b2) == witt_of_fpgram(r3.b2));
    }
}

TEST_CASE("fp_diagonalize preserves the Witt class computed by the oracle") {
    Rng rng(55);
    for (int i = 0; i < 40; ++i) {
        long p = i % 2 == 0 ? 3 : 7;
        size_t n = static_cast<size_t>(rng.range(1, 4));
        FpMat m(p, n, n);
        do {
            for (size_t r = 0; r < n; ++r)
                for (size_t c = r; c < n; ++c) {
                    long v = rng.below(p);
                    m.set(r, c, v);
                    m.set(c, r, v);
                }
        } while (m.det() == 0);
        DiagFormFp d = fp_diagonalize(FpGram(m, 1));
        CHECK(d.entries.size() == n);
        CHECK(witt_class_k(d) == witt_class_bruteforce(d));
        // determinant square class is a congruence invariant
        CHECK(square_class(m.det(), p) ==
              square_class([&] {
                  long prod = 1;
                  for (long e : d.entries) prod = prod * e % p;
                  return prod;
              }(), p));
    }
}
