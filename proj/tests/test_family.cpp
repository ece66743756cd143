#include "doctest.h"
#include "quivkit/canonical.hpp"
#include "quivkit/family.hpp"
#include "quivkit/selfinjective.hpp"

using namespace qk;

namespace {

CanonicalAlgebra c223(const Field& f) {
    CanonicalSpec spec;
    spec.field = f;
    spec.weights = {2, 2, 3};
    spec.params = {TubeIndex::inf(f), TubeIndex::at(Scalar(f, 0)), TubeIndex::at(Scalar::one(f))};
    return canonical_algebra(spec);
}

TubeFragment canonical_fragment(const CanonicalAlgebra& C, const TubeIndex& t, int extra = 1) {
    auto cyc = mouth_cycle(mouth_modules(C, t)[0]);
    return knit_tube(cyc, static_cast<int>(cyc.size()) + extra);
}

}  // namespace

TEST_CASE("stats of stable canonical tubes") {
    Field f = Field::rationals();
    auto C = c223(f);
    auto frag3 = canonical_fragment(C, TubeIndex::at(Scalar::one(f)));
    auto st3 = quasi_tube_stats(frag3);
    CHECK(st3.s == 2);
    CHECK(st3.p == 0);
    CHECK(st3.r == 3);
    CHECK(is_smooth(frag3));

    auto fragg = canonical_fragment(C, TubeIndex::at(Scalar(f, 7)), 2);
    auto stg = quasi_tube_stats(fragg);
    CHECK(stg.s == 0);
    CHECK(stg.p == 0);
    CHECK(stg.r == 1);
}

TEST_CASE("stats demand enough layers") {
    Field f = Field::rationals();
    auto C = c223(f);
    auto cyc = mouth_cycle(mouth_modules(C, TubeIndex::at(Scalar::one(f)))[0]);
    auto shallow = knit_tube(cyc, 2); /* rank 3 needs at least 4 layers */
    CHECK_THROWS_AS(quasi_tube_stats(shallow), Error);
}

TEST_CASE("mouth cycle rejects non-periodic modules") {
    Field f = Field::rationals();
    Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
    auto K = std::make_shared<BoundQuiverAlgebra>(f, q, std::vector<PathElement>{});
    /* the injective I(1) is preinjective: its tau-orbit never returns */
    CHECK_THROWS_AS(mouth_cycle(injective(K, 0), 6), Error);
}

TEST_CASE("canonical family satisfies the saturation conditions") {
    Field f = Field::rationals();
    auto C = c223(f);
    std::vector<TubeFragment> family;
    for (const auto& t : {TubeIndex::inf(f), TubeIndex::at(Scalar(f, 0)),
                          TubeIndex::at(Scalar::one(f)), TubeIndex::at(Scalar(f, 3))})
        family.push_back(canonical_fragment(C, t, 2));
    auto S = simple(C.A, C.vertex_zero());
    auto T = simple(C.A, C.vertex_omega());
    auto rep = check_ms(family, S, T);
    CHECK(rep.ms1);
    CHECK(rep.ms2);
    CHECK(rep.ms3);
    CHECK(rep.ok());
    REQUIRE(rep.stats.size() == 4);
    CHECK(rep.stats[0].r == 2);
    CHECK(rep.stats[2].r == 3);
    CHECK(rep.stats[3].r == 1);
    /* every fragment is a stable tube here, so the mouth criterion applies */
    for (const auto& frag : family)
        CHECK(standardness_via_mouth(frag) == Verdict::Certified);
}

TEST_CASE("corrupting a family breaks the composition-factor condition") {
    Field f = Field::rationals();
    auto C = c223(f);
    std::vector<TubeFragment> family = {canonical_fragment(C, TubeIndex::at(Scalar::one(f)))};
    /* adulterate the fragment with the injective at omega: its composition
       factors leave the allowed set */
    TubeVertex fake;
    fake.M = injective(C.A, 2); /* an arm vertex off the allowed support */
    family[0].layers.back().push_back(fake);
    auto S = simple(C.A, C.vertex_zero());
    auto T = simple(C.A, C.vertex_omega());
    auto rep = check_ms(family, S, T);
    CHECK_FALSE(rep.ms2);
    CHECK_FALSE(rep.ms2_failures.empty());
}

TEST_CASE("mouth criterion rejects fragments with projectives") {
    Field f = Field::rationals();
    auto C = c223(f);
    auto O = orbit_algebra(C.A, nakayama(C.A));
    auto P = gabriel_presentation(O);
    auto A = P.algebra;
    /* over the trivial-extension-type algebra the radical of an arm
       projective lies on a quasi-tube mouth whose tube contains P itself */
    int arm = C.arm_vertex(3, 1);
    auto PA = projective(A, arm);
    auto R = sub_rep(PA, radical_sub(PA));
    auto cyc = mouth_cycle(R, 12);
    auto frag = knit_tube(cyc, static_cast<int>(cyc.size()) + 1);
    bool plain_stable = is_smooth(frag) && frag.inserted.empty();
    CHECK_FALSE(plain_stable);
    CHECK_THROWS_AS(standardness_via_mouth(frag), Error);
}

TEST_CASE("factorization witness through the socle") {
    Field f = Field::rationals();
    Quiver q({"1"}, {{"x", 0, 0}});
    Scalar one = Scalar::one(f);
    std::vector<PathElement> rels = {
        make_relation(q, {{one, make_path(q, {0, 0})}})};
    auto A = std::make_shared<BoundQuiverAlgebra>(f, q, rels);
    auto M = projective(A, 0); /* dim 2, End(M) contains multiplication by x */
    auto S = simple(A, 0);
    auto w = factor_through_witness(M, S);
    REQUIRE(w.has_value());
    CHECK_FALSE(w->is_zero());
    /* and no nonzero endomorphism of S factors through the radical-free M? it
       does (inclusion then projection is zero; scalar route is not), so check
       the genuinely negative case: distinct simples */
    Quiver q2({"1", "2"}, {{"a", 0, 1}});
    auto A2 = std::make_shared<BoundQuiverAlgebra>(f, q2, std::vector<PathElement>{});
    CHECK_FALSE(factor_through_witness(simple(A2, 0), simple(A2, 1)).has_value());
}
