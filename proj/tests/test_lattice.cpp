#include "latmid/lattice.hpp"
#include "latmid/oracles.hpp"
#include "latmid/randgen.hpp"

#include <doctest.h>

using namespace latmid;

namespace {
Lattice diag(std::vector<Rat> d, long p) { return Lattice::diagonal(d, p); }
} // namespace

TEST_CASE("lattice equality uses the GL_n(R) criterion, not matrix equality") {
    // same lattice, different bases
    Lattice a(RatMat::from_rows({{Rat(1), Rat(4)}, {Rat(0), Rat(1)}}), 5);
    Lattice b = Lattice::standard(2, 5);
    CHECK(a == b);
    CHECK(a.canonical_basis() == b.canonical_basis());
    // 1/2 is a unit at p = 5
    Lattice c(RatMat::from_rows({{Rat(1) / 2, Rat(0)}, {Rat(0), Rat(1)}}), 5);
    CHECK(c == b);
    Lattice d = diag({Rat(5), Rat(1)}, 5);
    CHECK(d != b);
    CHECK(b.contains(d));
    CHECK(!d.contains(b));
}

TEST_CASE("canonical form equality matches the criterion on random pairs") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 4));
        long p = 3;
        Lattice l = random_lattice(rng, n, p, -2, 2);
        Lattice m = random_lattice(rng, n, p, -2, 2);
        CHECK((l == m) == (l.canonical_basis() == m.canonical_basis()));
    }
}

TEST_CASE("lattice_sum: examples") {
    Lattice std2 = Lattice::standard(2, 5);
    CHECK(lattice_sum(std2, std2) == std2);
    Lattice m = diag({Rat(5), Rat(1) / 5}, 5);
    CHECK(lattice_sum(std2, m) == diag({Rat(1), Rat(1) / 5}, 5));
    CHECK(lattice_sum(diag({Rat(5), Rat(5)}, 5), std2) == std2);
    CHECK_THROWS_AS(lattice_sum(std2, Lattice::standard(3, 5)), DimensionMismatch);
}

TEST_CASE("lattice_intersection: examples and duality oracle") {
    Lattice std2 = Lattice::standard(2, 5);
    Lattice m = diag({Rat(5), Rat(1) / 5}, 5);
    CHECK(lattice_intersection(std2, std2) == std2);
    CHECK(lattice_intersection(std2, m) == diag({Rat(5), Rat(1)}, 5));
    Rng rng(32);
    for (int i = 0; i < 40; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 5));
        long p = i % 2 == 0 ? 5 : 7;
        Lattice l = random_lattice(rng, n, p);
        Lattice k = random_lattice(rng, n, p);
        Lattice cap = lattice_intersection(l, k);
        CHECK(cap == intersection_via_duality(l, k));
        CHECK(l.contains(cap));
        CHECK(k.contains(cap));
        Lattice cup = lattice_sum(l, k);
        CHECK(cup.contains(l));
        CHECK(cup.contains(k));
    }
}

TEST_CASE("twist: examples and monotonicity") {
    Lattice l = Lattice::standard(2, 5);
    CHECK(l.twist(0) == l);
    CHECK(l.twist(1) == diag({Rat(1) / 5, Rat(1) / 5}, 5));
    CHECK(l.twist(1).twist(-1) == l);
    for (long a = -2; a <= 2; ++a)
        for (long b = a; b <= 2; ++b) CHECK(l.twist(b).contains(l.twist(a)));
}

TEST_CASE("compatible_splitting: examples and round-trip") {
    Lattice std2 = Lattice::standard(2, 5);
    SplittingCert same = compatible_splitting(std2, Lattice(RatMat::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}}), 5));
    CHECK(same.exponents_l == same.exponents_m); // equal lattices
    SplittingCert cert = compatible_splitting(std2, diag({Rat(5), Rat(1) / 5}, 5));
    std::vector<long> diffs;
    for (size_t i = 0; i < 2; ++i) diffs.push_back(cert.exponents_m[i] - cert.exponents_l[i]);
    std::sort(diffs.begin(), diffs.end());
    CHECK(diffs == std::vector<long>{-1, 1});
    Rng rng(33);
    for (int i = 0; i < 40; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 5));
        long p = 3;
        Lattice l = random_lattice(rng, n, p), m = random_lattice(rng, n, p);
        SplittingCert c = compatible_splitting(l, m);
        CHECK(lattice_from_cert(c.basis, c.exponents_l, p) == l);
        CHECK(lattice_from_cert(c.basis, c.exponents_m, p) == m);
    }
}

TEST_CASE("middles: diagonal example and equal lattices") {
    Lattice l = Lattice::standard(2, 5);
    Lattice m = diag({Rat(5), Rat(1) / 5}, 5);
    CHECK(middle_lower(l, m) == diag({Rat(5), Rat(1)}, 5));
    CHECK(middle_upper(l, m) == diag({Rat(1), Rat(1) / 5}, 5));
    CHECK(middle_lower(l, l) == l);
    CHECK(middle_upper(l, l) == l);
}

TEST_CASE("middles of twists realize the integer middles") {
    Rng rng(34);
    Lattice l = random_lattice(rng, 3, 5);
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) {
            auto [lo, hi] = int_middles(x, y);
            CHECK(middle_lower(l.twist(x), l.twist(y)) == l.twist(lo));
            CHECK(middle_upper(l.twist(x), l.twist(y)) == l.twist(hi));
        }
}

TEST_CASE("middle laws on random pairs (sandwich, 1.2.4, 1.2.6-1.2.8, symmetry)") {
    Rng rng(35);
    for (int i = 0; i < 25; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 4));
        long p = i % 2 == 0 ? 3 : 7;
        Lattice l = random_lattice(rng, n, p), m = random_lattice(rng, n, p);
        Lattice ml = middle_lower(l, m), mu = middle_upper(l, m);
        Lattice cap = lattice_intersection(l, m), cup = lattice_sum(l, m);
        CHECK(ml.contains(cap));
        CHECK(mu.contains(ml));
        CHECK(cup.contains(mu));
        CHECK(ml.contains(mu.twist(-1)));
        CHECK(middle_lower(m, l) == ml);
        CHECK(middle_upper(m, l) == mu);
        CHECK(middle_lower(l.twist(-1), m) == mu.twist(-1));
        CHECK(middle_upper(l.twist(-1), m) == ml);
        CHECK(middle_lower(cup, cap) == ml);
        CHECK(middle_upper(cup, cap) == mu);
    }
}

TEST_CASE("1.2 remark: the quotient torsion modules are abstractly isomorphic") {
    Rng rng(36);
    for (int i = 0; i < 25; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 4));
        Lattice l = random_lattice(rng, n, 3), m = random_lattice(rng, n, 3);
        Lattice ml = middle_lower(l, m), mu = middle_upper(l, m);
        Lattice cap = lattice_intersection(l, m), cup = lattice_sum(l, m);
        CHECK(quotient_type(cup, mu) == quotient_type(ml, cap));
        CHECK(quotient_type(cup, ml) == quotient_type(mu, cap));
    }
}

TEST_CASE("truncation soundness on random pairs") {
    Rng rng(37);
    for (int i = 0; i < 15; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 4));
        Lattice l = random_lattice(rng, n, 5), m = random_lattice(rng, n, 5);
        long a = codistance(l, m);
        CHECK(middle_lower(l, m) == middle_lower(l, m, 2 * a + 2));
        CHECK(middle_upper(l, m) == middle_upper(l, m, 2 * a + 2));
    }
}

TEST_CASE("torsion middles: examples and brute-force agreement") {
    // R/pi: m_- = 0, m_+ = T (n = 0 term of the sum; intersection over n >= 1 is T)
    auto [l1, u1] = torsion_middles(TorsionModule(std::vector<long>{1}));
    CHECK(l1 == TorsionModule(std::vector<long>{}));
    CHECK(u1 == TorsionModule(std::vector<long>{1}));
    // R/pi^2: both are pi T = R/pi
    auto [l2, u2] = torsion_middles(TorsionModule(std::vector<long>{2}));
    CHECK(l2 == TorsionModule(std::vector<long>{1}));
    CHECK(u2 == TorsionModule(std::vector<long>{1}));
    for (long p : {2L, 3L}) {
        std::vector<std::vector<long>> cases = {{}, {1}, {2}, {3}, {1, 1}, {2, 1}, {2, 2}, {3, 1}};
        for (const auto& e : cases) {
            TorsionModule t(e);
            TorsionBrute brute = torsion_middles_bruteforce(t, p);
            auto [lo, hi] = torsion_middles(t);
            CHECK(lo == brute.lower);
            CHECK(hi == brute.upper);
            CHECK(brute.sandwich_ok); // (1.3.4)
            CHECK(brute.upper == brute.t_mod_lower); // (1.3.5)
            CHECK(brute.lower == brute.t_mod_upper); // (1.3.6)
        }
    }
}

TEST_CASE("torsion middles relate to lattice middles: m(T) = m(L,M)/(L∩M)") {
    Rng rng(38);
    for (int i = 0; i < 20; ++i) {
        size_t n = static_cast<size_t>(rng.range(1, 4));
        Lattice l = random_lattice(rng, n, 3, -2, 2), m = random_lattice(rng, n, 3, -2, 2);
        Lattice cap = lattice_intersection(l, m), cup = lattice_sum(l, m);
        TorsionModule t = quotient_type(cup, cap);
        auto [lo, hi] = torsion_middles(t);
        CHECK(lo == quotient_type(middle_lower(l, m), cap));
        CHECK(hi == quotient_type(middle_upper(l, m), cap));
    }
}

TEST_CASE("zero-dimensional lattices are accepted everywhere") {
    Lattice z = Lattice::standard(0, 5);
    CHECK(z == z);
    CHECK(lattice_sum(z, z) == z);
    CHECK(lattice_intersection(z, z) == z);
    CHECK(middle_lower(z, z) == z);
    CHECK(middle_upper(z, z) == z);
    CHECK(compatible_splitting(z, z).exponents_l.empty());
}

TEST_CASE("lattice constructor rejects singular bases") {
    RatMat sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(1, 0) = 1;
    CHECK_THROWS_AS(Lattice(sing, 5), SingularMatrix);
}
