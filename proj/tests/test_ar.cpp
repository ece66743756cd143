#include "doctest.h"
#include "quivkit/ar.hpp"

using namespace qk;

namespace {

AlgebraPtr kronecker_algebra(const Field& f) {
    Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
    return std::make_shared<BoundQuiverAlgebra>(f, q, std::vector<PathElement>{});
}

Representation kron_reg(const AlgebraPtr& A, const Scalar& lam) {
    Matrix ma(A->field(), 1, 1), mb(A->field(), 1, 1);
    ma.at(0, 0) = Scalar::one(A->field());
    mb.at(0, 0) = lam;
    return Representation(A, {1, 1}, {ma, mb});
}

/* linear A_3 quiver 1 -> 2 -> 3 */
AlgebraPtr a3_algebra(const Field& f) {
    Quiver q({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}});
    return std::make_shared<BoundQuiverAlgebra>(f, q, std::vector<PathElement>{});
}

}  // namespace

TEST_CASE("projective cover and syzygy") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    auto S1 = simple(A, 0);
    auto pres = minimal_projective_presentation(S1);
    CHECK(pres.P0.dims() == std::vector<int>{1, 2});
    CHECK(pres.omega.dims() == std::vector<int>{0, 2});
    CHECK(pres.P1.dims() == std::vector<int>{0, 2});
    CHECK(pres.p0_vertices == std::vector<int>{0});
    CHECK(pres.p1_vertices == std::vector<int>{1, 1});
    /* d is injective here */
    CHECK(image(pres.P1, pres.d, pres.P0).total_dim() == 2);

    auto P2 = projective(A, 1);
    Hom cov;
    auto P = projective_cover(P2, &cov);
    CHECK(P.dims() == P2.dims());
    CHECK(is_invertible(cov));
}

TEST_CASE("injective envelope") {
    Field f = Field::rationals();
    auto A = a3_algebra(f);
    Hom env;
    auto S2 = simple(A, 1);
    auto I = injective_envelope(S2, &env);
    CHECK(is_injective_rep(I, nullptr));
    CHECK(socle_dims(I) == std::vector<int>{0, 1, 0});
    /* envelope is injective on the socle */
    CHECK(image(S2, env, I).total_dim() == 1);
}

TEST_CASE("tau on the Kronecker algebra") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    /* projectives die */
    CHECK(tau(projective(A, 0)).total_dim() == 0);
    CHECK(tau(projective(A, 1)).total_dim() == 0);
    /* injectives die under tau_minus */
    CHECK(tau_minus(injective(A, 0)).total_dim() == 0);
    /* homogeneous regulars are tau-fixed */
    for (int l : {0, 1, 2, 5, -3}) {
        auto R = kron_reg(A, Scalar(f, l));
        auto tR = tau(R);
        CHECK(tR.dims() == R.dims());
        CHECK(is_isomorphic(tR, R));
        CHECK(is_isomorphic(tau_minus(R), R));
    }
    /* preprojectives (n, n+1) satisfy tau^-(n, n+1) = (n+2, n+3) */
    auto next = tau_minus(projective(A, 1));
    CHECK(next.dims() == std::vector<int>{2, 3});
    CHECK(is_isomorphic(tau(next), projective(A, 1)));
    auto next2 = tau_minus(projective(A, 0));
    CHECK(next2.dims() == std::vector<int>{3, 4});
    CHECK(is_isomorphic(tau(next2), projective(A, 0)));
}

TEST_CASE("tau on A_3") {
    Field f = Field::rationals();
    auto A = a3_algebra(f);
    /* AR quiver of A_3 linear: tau S(2) = ? S(2) has presentation
       P(2) <- P(3); tau S(2) is the indecomposable with dims (1,1,0)?
       Known: tau(S(2)) = [1 1 0] module (the projective P(1)/soc?).
       Check defining properties instead: almost split sequences and the
       formula dim Ext^1(X,Y) = dim stable Hom(Y, tau X). */
    auto S2 = simple(A, 1);
    auto t = tau(S2);
    CHECK(t.total_dim() > 0);
    CHECK(ext1_dim(S2, t) == 1);
    CHECK(inj_stable_hom_dim(t, t) == 1);
    /* orbit through the AR quiver terminates at a projective */
    auto orbit = tau_orbit(injective(A, 0), 10);
    CHECK(orbit.size() >= 2);
}

TEST_CASE("ext1 via syzygies") {
    Field f = Field::rationals();
    auto A = a3_algebra(f);
    auto S1 = simple(A, 0), S2 = simple(A, 1), S3 = simple(A, 2);
    /* arrows 1->2, 2->3: nonsplit extensions P(1)/rad^2 of S1 by S2 etc. */
    CHECK(ext1_dim(S1, S2) == 1);
    CHECK(ext1_dim(S2, S3) == 1);
    CHECK(ext1_dim(S1, S3) == 0);
    CHECK(ext1_dim(S2, S1) == 0);
    CHECK(ext1_dim(S3, S3) == 0);
    /* projectives have no extensions */
    CHECK(ext1_dim(projective(A, 0), S3) == 0);
    /* Kronecker: Ext^1(S1, S2) is 2-dimensional */
    auto K = kronecker_algebra(f);
    CHECK(ext1_dim(simple(K, 0), simple(K, 1)) == 2);
    CHECK(ext1_dim(simple(K, 1), simple(K, 0)) == 0);
}

TEST_CASE("Auslander-Reiten formula on random-ish modules") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    std::vector<Representation> samples{simple(A, 0), kron_reg(A, Scalar(f, 2)),
                                        injective(A, 1), tau_minus(projective(A, 0))};
    for (const auto& X : samples) {
        if (is_projective_rep(X)) continue;
        for (const auto& Y : samples) {
            int e = ext1_dim(X, Y);
            CHECK(e == inj_stable_hom_dim(Y, tau(X)));
            CHECK(e == proj_stable_hom_dim(tau_minus(Y), X));
        }
    }
}

TEST_CASE("almost split sequences") {
    Field f = Field::rationals();
    auto A = a3_algebra(f);
    auto S3 = simple(A, 2);  // socle of P(2): AR sequence 0 -> S3 -> P(2) -> S2 -> 0
    auto S2 = simple(A, 1);
    auto seq = almost_split_sequence(S2);
    CHECK(is_isomorphic(seq.tauX, S3));
    CHECK(seq.middle.dims() == std::vector<int>{0, 1, 1});
    CHECK(is_isomorphic(seq.middle, projective(A, 1)));

    /* Kronecker regular: middle is the 2-layer tube module R_lambda^(2) */
    auto K = kronecker_algebra(f);
    auto R = kron_reg(K, Scalar(f, 2));
    auto rseq = almost_split_sequence(R);
    CHECK(is_isomorphic(rseq.tauX, R));
    CHECK(rseq.middle.dims() == std::vector<int>{2, 2});
    CHECK(hom_dim(rseq.middle, rseq.middle) == 2);  // indecomposable, End = K[x]/x^2

    /* trying a projective fails */
    CHECK_THROWS_AS(almost_split_sequence(projective(K, 0)), Error);
}
