#include "doctest.h"
#include "quivkit/ar.hpp"
#include "quivkit/extensions.hpp"

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

TEST_CASE("one-point extension basics") {
    Field f = Field::rationals();
    Quiver q({"1", "2"}, {{"a", 0, 1}});
    auto A = std::make_shared<BoundQuiverAlgebra>(f, q, std::vector<PathElement>{});

    /* by a simple: one new arrow, no relations */
    auto r = one_point_extension(A, simple(A, 1), "v");
    CHECK(r.algebra->quiver().num_arrows() == 2);
    CHECK(r.added_relations.empty());
    CHECK(r.algebra->dim() == A->dim() + 2);
    /* new projective has radical X */
    auto Pv = projective(r.algebra, r.new_vertex);
    auto radPv = sub_rep(Pv, radical_sub(Pv));
    CHECK(radPv.dims() == std::vector<int>{0, 1, 0});

    /* by zero: disconnected point */
    auto rz = one_point_extension(A, Representation::zero(A), "z");
    CHECK(rz.algebra->dim() == A->dim() + 1);
    CHECK(rz.new_arrows.empty());

    /* by P(1): paths from v realize P(1), one relation binding nothing (P
       free) */
    auto rp = one_point_extension(A, projective(A, 0), "w");
    CHECK(rp.algebra->dim() == A->dim() + 3);
    auto Pw = projective(rp.algebra, rp.new_vertex);
    CHECK(sub_rep(Pw, radical_sub(Pw)).dims() == std::vector<int>{1, 1, 0});
}

TEST_CASE("one-point coextension duality") {
    Field f = Field::rationals();
    Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
    auto A = std::make_shared<BoundQuiverAlgebra>(f, q, std::vector<PathElement>{});
    Matrix ma(f, 1, 1), mb(f, 1, 1);
    ma.at(0, 0) = Scalar::one(f);
    mb.at(0, 0) = Scalar(f, 2);
    Representation X(A, {1, 1}, {ma, mb});

    auto r = one_point_coextension(A, X, "v", {"c"});
    CHECK(r.algebra->dim() == A->dim() + X.total_dim() + 1);
    /* new vertex is a sink; I(v)/soc realizes X */
    auto Iv = injective(r.algebra, r.new_vertex);
    auto quot = quotient_rep(Iv, socle_sub(Iv));
    CHECK(quot.dims() == std::vector<int>{1, 1, 0});
    Representation Xemb = embed(X, r.algebra, {0, 1}, {0, 1});
    CHECK(is_isomorphic(quot, Xemb));
}

TEST_CASE("ad1 with a line") {
    Field f = Field::rationals();
    Quiver q({"1", "2"}, {{"a", 0, 1}});
    auto A = std::make_shared<BoundQuiverAlgebra>(f, q, std::vector<PathElement>{});
    auto r = ad1(A, simple(A, 1), 2, "v");
    /* A x H_2 has dim 3 + 3; extension adds dim(X + Y) + 1 = 1 + 2 + 1 */
    CHECK(r.algebra->dim() == 3 + 3 + 4);
    CHECK(r.algebra->quiver().num_vertices() == 5);
    CHECK_THROWS_AS(ad1(A, direct_sum({simple(A, 1), simple(A, 1)}), 1, "w"), Error);
}

TEST_CASE("branch coextension reproducing the 10-vertex bound quiver") {
    Field f = Field::rationals();
    auto C = c223(f);
    auto inf = TubeIndex::inf(f);
    auto zero = TubeIndex::at(Scalar(f, 0));
    auto one = TubeIndex::at(Scalar(f, 1));

    Branch L1;  // single vertex
    L1.quiver = Quiver({"b1"}, {});
    Branch L2;
    L2.quiver = Quiver({"b2"}, {});
    Branch L3;  // two vertices joined by eta1, root is the upper vertex
    L3.quiver = Quiver({"b4", "b3"}, {{"eta1", 0, 1}});
    L3.root = 0;

    BranchExtensionSpec spec;
    spec.base = C;
    spec.coextension = true;
    spec.attachments = {{mouth_modules(C, inf).back(), L1, "sigma1"},
                        {mouth_modules(C, zero).back(), L2, "xi1"},
                        {mouth_modules(C, one).back(), L3, "eta2"}};
    auto B = branch_extension(spec);
    const auto& q = B.algebra->quiver();
    CHECK(q.num_vertices() == 10);
    CHECK(q.num_arrows() == 11);
    /* connectors start at the unique sink 0 of the canonical part */
    for (const auto& conn : B.connectors) {
        REQUIRE(conn.size() == 1);
        CHECK(q.arrow(conn[0]).from == C.vertex_zero());
    }
    /* each coextension contributes a monomial relation
       (first arm arrow) . connector, plus the canonical relation */
    int monomial = 0;
    for (const auto& r : B.algebra->relations())
        if (r.terms.size() == 1 && r.terms[0].path.length() == 2) ++monomial;
    CHECK(monomial == 3);
    /* the two surviving arm routes into a branch agree up to sign, so each
       omega -> root slot is one-dimensional */
    for (const auto& bv : B.branch_vertex)
        CHECK(B.algebra->block_dim(C.vertex_omega(), bv[0]) == 1);
    CHECK(B.algebra->block_dim(C.vertex_zero(), B.branch_vertex[0][0]) == 1);
    /* down the long branch: omega -> b3 through b4 */
    CHECK(B.algebra->block_dim(C.vertex_omega(), B.branch_vertex[2][1]) == 1);

    /* I(root)/S(root) recovers the attachment module for the plain branches */
    auto Iv = injective(B.algebra, B.branch_vertex[0][0]);
    auto quot = quotient_rep(Iv, socle_sub(Iv));
    std::vector<int> vmap, amap;
    for (int v = 0; v < C.A->quiver().num_vertices(); ++v) vmap.push_back(v);
    for (int a = 0; a < C.A->quiver().num_arrows(); ++a) amap.push_back(a);
    auto Einf = embed(mouth_modules(C, inf).back(), B.algebra, vmap, amap);
    CHECK(is_isomorphic(quot, Einf));

    /* dimension audit: dim B = dim C + sum (dim E_i + 1) + branch content */
    CHECK(B.algebra->quiver().is_acyclic());
}

TEST_CASE("mouth mismatch is rejected") {
    Field f = Field::rationals();
    auto C = c223(f);
    Branch L;
    L.quiver = Quiver({"x"}, {});
    BranchExtensionSpec spec;
    spec.base = C;
    spec.coextension = true;
    spec.attachments = {{projective(C.A, C.vertex_omega()), L, "c"}};
    CHECK_THROWS_AS(branch_extension(spec), Error);
}
