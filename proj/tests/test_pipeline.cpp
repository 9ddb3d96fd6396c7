#include "latmid/fixtures.hpp"
#include "latmid/pipeline.hpp"
#include "latmid/randgen.hpp"

#include <doctest.h>

using namespace latmid;

TEST_CASE("reduce_with_form: trivial group over Q^2 at p = 5") {
    GroupRepK trivial{{}, 1};
    GramForm b(RatMat::identity(2), 1);
    ReductionReport r = reduce_with_form(trivial, b, ValConfig(5), 3);
    CHECK(r.all_checks());
    CHECK(r.e1.module.dim == 2);
    CHECK(r.e2.module.dim == 0);
    // <1,1> over F_5 is hyperbolic (-1 is a square), so both residues vanish
    CHECK(r.witt_q1.is_zero());
    CHECK(r.witt_q2.is_zero());
    CHECK(r.witt_total.is_zero());
}

TEST_CASE("reduce_with_form: S3 with the ramified invariant form at p = 3") {
    GroupFixture s3 = fixture_groups()[2];
    ReductionReport r = reduce_with_form(s3.rep(), s3.form(), ValConfig(3), 5);
    CHECK(r.all_checks());
    CHECK(r.e1.module.dim == 1);
    CHECK(r.e2.module.dim == 1);
    // hand diagonalization <2, 3/2>: residues <2> and <2>
    WittClass two = witt_class_k({3, {2}});
    CHECK(r.witt_q1 == two);
    CHECK(r.witt_q2 == two);
    CHECK(r.witt_total == witt_add(two, two));
}

TEST_CASE("reduce_with_form: S3 form away from the ramified prime") {
    GroupFixture s3 = fixture_groups()[2];
    for (long p : {5L, 7L}) {
        ReductionReport r = reduce_with_form(s3.rep(), s3.form(), ValConfig(p), 5);
        CHECK(r.all_checks());
        CHECK(r.e1.module.dim + r.e2.module.dim == 2);
    }
}

TEST_CASE("reduce_with_form: Q8 symplectic 4-dimensional representation") {
    GroupFixture q8 = fixture_groups()[4];
    for (long p : {3L, 5L}) {
        ReductionReport r = reduce_with_form(q8.rep(), q8.form(), ValConfig(p), 6);
        CHECK(r.all_checks());
        CHECK(!r.orthogonal);
        CHECK(r.e1.module.dim + r.e2.module.dim == 4);
    }
}

TEST_CASE("reduce_with_form: alternating case tolerates p = 2") {
    GroupFixture q8 = fixture_groups()[4];
    ReductionReport r = reduce_with_form(q8.rep(), q8.form(), ValConfig(2), 9);
    CHECK(r.all_checks());
    CHECK(!r.orthogonal);
    CHECK(r.e1.module.dim + r.e2.module.dim == 4);
}

TEST_CASE("reduce_with_form: precondition violations") {
    GroupFixture s3 = fixture_groups()[2];
    // the spec's sign-typo matrix is not invariant; detected as such
    GramForm not_inv(RatMat::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(2)}}), 1);
    CHECK_THROWS_AS(reduce_with_form(s3.rep(), not_inv, ValConfig(3), 1), NotInvariant);
    // orthogonal case at p = 2
    GroupRepK trivial{{}, 1};
    CHECK_THROWS_AS(reduce_with_form(trivial, GramForm(RatMat::identity(2), 1), ValConfig(2), 1),
                    WrongCharacteristic);
}

TEST_CASE("reduce_with_form: lattice-choice independence of the contractual outputs") {
    Rng rng(71);
    GroupFixture c3 = fixture_groups()[1];
    ValConfig cfg(3);
    std::vector<ReductionReport> rs;
    rs.push_back(reduce_with_form(c3.rep(), c3.form(), cfg, 7));
    for (int k = 0; k < 3; ++k)
        rs.push_back(
            reduce_with_form_from(c3.rep(), c3.form(), cfg, random_lattice(rng, 2, 3, -2, 2), 8 + k));
    for (const ReductionReport& r : rs) CHECK(r.all_checks());
    for (size_t k = 1; k < rs.size(); ++k) {
        CHECK(rs[k].witt_q1 == rs[0].witt_q1);
        CHECK(rs[k].witt_q2 == rs[0].witt_q2);
        CHECK(rs[k].witt_total == rs[0].witt_total);
        CHECK(ss_isomorphic(semisimplify(direct_sum(rs[k].e1.module, rs[k].e2.module), 1),
                            semisimplify(direct_sum(rs[0].e1.module, rs[0].e2.module), 2)));
    }
}

TEST_CASE("reduce_with_form: every fixture and prime passes all checks") {
    for (const GroupFixture& fix : fixture_groups())
        for (long p : {3L, 5L, 7L}) {
            ReductionReport r = reduce_with_form(fix.rep(), fix.form(), ValConfig(p), 11);
            INFO(fix.name, " p=", p);
            CHECK(r.all_checks());
            if (r.orthogonal)
                CHECK(witt_of_fpgram(FpGram(FpMat::block_diag(r.e1.form.mat, r.e2.form.mat), 1)) ==
                      witt_add(r.witt_q1, r.witt_q2));
        }
}

TEST_CASE("symmetrize: invariant forms for fixture construction") {
    Rng rng(72);
    GroupFixture s3 = fixture_groups()[2];
    RatMat b0(2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = i; j < 2; ++j) {
            Rat v = random_scalar(rng, 3, 0, 1, 3);
            b0.at(i, j) = v;
            b0.at(j, i) = v;
        }
    b0.at(0, 0) += 7; // keep the average away from degeneracy
    GramForm inv = symmetrize(s3.generators, b0, 1);
    for (const RatMat& g : s3.generators) CHECK(g.transpose() * inv.mat * g == inv.mat);
    // alternating seed stays alternating
    RatMat a0 = RatMat::from_rows({{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}});
    GramForm inva = symmetrize(fixture_groups()[1].generators, a0, -1);
    CHECK(inva.mat.at(0, 0) == Rat(0));
    for (const RatMat& g : fixture_groups()[1].generators)
        CHECK(g.transpose() * inva.mat * g == inva.mat);
    // fixture invariant grams are themselves fixed points
    for (const GroupFixture& fix : fixture_groups()) {
        GramForm b = fix.form();
        for (const RatMat& g : fix.generators) CHECK(g.transpose() * b.mat * g == b.mat);
    }
}

TEST_CASE("enumerate_group: orders of the fixture groups") {
    for (const GroupFixture& fix : fixture_groups())
        CHECK(enumerate_group(fix.generators, 64).size() == static_cast<size_t>(fix.order));
}
