#include "doctest.h"
#include "quivkit/ar.hpp"
#include "quivkit/canonical.hpp"

using namespace qk;

namespace {

CanonicalAlgebra c223(const Field& f) {
    CanonicalSpec spec;
    spec.field = f;
    spec.weights = {2, 2, 3};
    spec.params = {TubeIndex::inf(f), TubeIndex::at(Scalar(f, 0)), TubeIndex::at(Scalar(f, 1))};
    return canonical_algebra(spec);
}

}  // namespace

TEST_CASE("canonical algebra construction") {
    Field f = Field::rationals();
    auto C = c223(f);
    CHECK(C.A->quiver().num_vertices() == 6);
    CHECK(C.A->quiver().num_arrows() == 7);
    CHECK(C.A->relations().size() == 1);
    /* two independent paths from omega to 0 survive the relation */
    CHECK(C.A->block_dim(C.vertex_omega(), C.vertex_zero()) == 2);
    /* S(0) projective, S(omega) injective */
    CHECK(is_projective_rep(simple(C.A, C.vertex_zero())));
    CHECK(is_injective_rep(simple(C.A, C.vertex_omega()), nullptr));

    /* two weights: hereditary, (1,1) gives the 2-arrow two-vertex quiver */
    CanonicalSpec k;
    k.field = f;
    k.weights = {1, 1};
    k.params = {TubeIndex::inf(f), TubeIndex::at(Scalar(f, 0))};
    auto K = canonical_algebra(k);
    CHECK(K.A->quiver().num_vertices() == 2);
    CHECK(K.A->quiver().num_arrows() == 2);
    CHECK(K.A->dim() == 4);

    /* bad specs */
    CanonicalSpec bad = k;
    bad.params = {TubeIndex::at(Scalar(f, 0)), TubeIndex::inf(f)};
    CHECK_THROWS_AS(canonical_algebra(bad), Error);
    bad = c223(f).spec;
    bad.params[2] = TubeIndex::at(Scalar(f, 0));
    CHECK_THROWS_AS(canonical_algebra(bad), Error);
}

TEST_CASE("mouth modules and tube ranks") {
    Field f = Field::rationals();
    auto C = c223(f);
    auto inf = TubeIndex::inf(f);
    auto zero = TubeIndex::at(Scalar(f, 0));
    auto one = TubeIndex::at(Scalar(f, 1));
    auto generic = TubeIndex::at(Scalar(f, 7));

    CHECK(tube_rank(C, inf) == 2);
    CHECK(tube_rank(C, zero) == 2);
    CHECK(tube_rank(C, one) == 3);
    CHECK(tube_rank(C, generic) == 1);

    auto minf = mouth_modules(C, inf);
    REQUIRE(minf.size() == 2);
    /* S(1,1) and E^(inf) which vanishes on arm 1 */
    CHECK(minf[0].dims() == std::vector<int>{0, 1, 0, 0, 0, 0});
    CHECK(minf[1].dims() == std::vector<int>{1, 0, 1, 1, 1, 1});

    auto mone = mouth_modules(C, one);
    REQUIRE(mone.size() == 3);
    CHECK(mone[2].dims() == std::vector<int>{1, 1, 1, 0, 0, 1});
    /* twisted first arrows of E^(1): arm 1 gets -1, arm 3 dead */
    CHECK(mone[2].map(C.arm_arrow(1, 1)).at(0, 0) == Scalar(f, -1));

    auto mgen = mouth_modules(C, generic);
    REQUIRE(mgen.size() == 1);
    CHECK(mgen[0].dims() == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(mgen[0].map(C.arm_arrow(1, 1)).at(0, 0) == Scalar(f, -7));
    CHECK(mgen[0].map(C.arm_arrow(3, 1)).at(0, 0) == Scalar(f, 6));

    /* mouth dimension vectors of a parameter tube sum to the generic one */
    for (const auto& t : {inf, zero, one}) {
        auto mouth = mouth_modules(C, t);
        std::vector<int> sum(6, 0);
        for (const auto& M : mouth)
            for (int v = 0; v < 6; ++v) sum[v] += M.dim(v);
        CHECK(sum == mgen[0].dims());
    }
}

TEST_CASE("tau cycles on canonical mouths") {
    Field f = Field::rationals();
    auto C = c223(f);
    auto one = TubeIndex::at(Scalar(f, 1));
    auto mouth = mouth_modules(C, one);  // S(3,1), S(3,2), E^(1)
    /* tau S(3,1) = E^(1), tau E^(1) = S(3,2), tau S(3,2) = S(3,1) */
    CHECK(is_isomorphic(tau(mouth[0]), mouth[2]));
    CHECK(is_isomorphic(tau(mouth[2]), mouth[1]));
    CHECK(is_isomorphic(tau(mouth[1]), mouth[0]));
    /* generic mouth is tau-fixed */
    auto g = mouth_modules(C, TubeIndex::at(Scalar(f, 5)));
    CHECK(is_isomorphic(tau(g[0]), g[0]));
}

TEST_CASE("ext table of the canonical tubes") {
    Field f = Field::rationals();
    auto C = c223(f);
    auto S = simple(C.A, C.vertex_zero());
    auto T = simple(C.A, C.vertex_omega());
    for (int i = 1; i <= 3; ++i) {
        int p = C.spec.weights[i - 1];
        for (int k = 1; k <= p - 1; ++k) {
            auto Sik = simple(C.A, C.arm_vertex(i, k));
            CHECK(ext1_dim(T, Sik) == (k == p - 1 ? 1 : 0));
            CHECK(ext1_dim(Sik, S) == (k == 1 ? 1 : 0));
            CHECK(ext1_dim(Sik, T) == 0);
            CHECK(ext1_dim(S, Sik) == 0);
        }
    }
}

TEST_CASE("knitting canonical tubes") {
    Field f = Field::rationals();
    auto C = c223(f);
    auto frag = knit_tube(mouth_modules(C, TubeIndex::at(Scalar(f, 1))), 3);
    CHECK(frag.rank == 3);
    CHECK(frag.layers.size() == 3);
    /* only the mouth simples are simple; no projectives in a stable tube */
    CHECK(frag.simple_count == 2);
    CHECK(frag.proj_count == 0);
    /* dims additivity at layer 2: [tau X] + [X] = middle dims */
    for (int k = 0; k < 3; ++k) {
        const auto& X = frag.layers[1][k].M;
        CHECK(X.check_relations());
    }
    auto hom_frag = knit_tube(mouth_modules(C, TubeIndex::at(Scalar(f, 4))), 3);
    CHECK(hom_frag.rank == 1);
    CHECK(hom_frag.simple_count == 0);
    CHECK(hom_frag.layers[2][0].M.total_dim() == 3 * hom_frag.layers[0][0].M.total_dim());
    CHECK(tube_dot(frag).find("dashed") != std::string::npos);
}

TEST_CASE("family verification") {
    Field f = Field::rationals();
    auto C = c223(f);
    std::vector<TubeIndex> sample{TubeIndex::inf(f), TubeIndex::at(Scalar(f, 0)),
                                  TubeIndex::at(Scalar(f, 1)), TubeIndex::at(Scalar(f, 2))};
    auto rep = verify_canonical_family(C, sample);
    for (const auto& s : rep.failures) MESSAGE(s);
    CHECK(rep.ok);

    /* corrupting one entry of E^(1) must surface */
    auto mouth = mouth_modules(C, TubeIndex::at(Scalar(f, 1)));
    auto bad = mouth[2];
    bad.map(C.arm_arrow(1, 1)).at(0, 0) = Scalar(f, 3);
    std::string why;
    CHECK(!bad.check_relations(&why));
}
