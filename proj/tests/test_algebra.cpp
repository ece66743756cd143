#include "doctest.h"
#include "quivkit/algebra.hpp"

using namespace qk;

namespace {

Quiver kronecker() {
    return Quiver({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
}

PathTerm term(const Quiver& q, const Scalar& c, const std::vector<std::string>& arrows) {
    std::vector<int> ids;
    for (const auto& n : arrows) ids.push_back(q.arrow_index(n));
    return {c, make_path(q, ids)};
}

}  // namespace

TEST_CASE("path algebra of the Kronecker quiver") {
    Field f = Field::rationals();
    BoundQuiverAlgebra A(f, kronecker(), {});
    CHECK(A.dim() == 4);
    CHECK(A.block_dim(0, 1) == 2);
    CHECK(A.block_dim(1, 0) == 0);
    auto e1 = A.idempotent(0), e2 = A.idempotent(1);
    auto a = A.arrow_elt(0);
    CHECK(A.mul(e1, a) == a);
    CHECK(A.mul(a, e2) == a);
    CHECK(A.is_zero_elt(A.mul(a, e1)));
    CHECK(A.mul(A.unit(), a) == a);
}

TEST_CASE("linear A_3 with zero relation") {
    Field f = Field::rationals();
    Quiver q({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}});
    SUBCASE("hereditary") {
        BoundQuiverAlgebra A(f, q, {});
        CHECK(A.dim() == 6);
        CHECK(A.block_dim(0, 2) == 1);
    }
    SUBCASE("rad square zero") {
        PathElement r;
        r.terms.push_back(term(q, Scalar::one(f), {"a", "b"}));
        BoundQuiverAlgebra A(f, q, {r});
        CHECK(A.dim() == 5);
        CHECK(A.block_dim(0, 2) == 0);
        auto ab = A.mul(A.arrow_elt(0), A.arrow_elt(1));
        CHECK(A.is_zero_elt(ab));
    }
}

TEST_CASE("commutative square") {
    Field f = Field::rationals();
    Quiver q({"1", "2", "3", "4"},
             {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}});
    PathElement r;
    r.terms.push_back(term(q, Scalar::one(f), {"a", "c"}));
    r.terms.push_back(term(q, -Scalar::one(f), {"b", "d"}));
    BoundQuiverAlgebra A(f, q, {r});
    CHECK(A.dim() == 9);
    CHECK(A.block_dim(0, 3) == 1);
    auto ac = A.mul(A.arrow_elt(0), A.arrow_elt(2));
    auto bd = A.mul(A.arrow_elt(1), A.arrow_elt(3));
    CHECK(ac == bd);
}

TEST_CASE("cyclic Nakayama algebra (rad cubed zero)") {
    Field f = Field::rationals();
    Quiver q({"1", "2"}, {{"a", 0, 1}, {"d", 1, 0}});
    PathElement r1, r2;
    r1.terms.push_back(term(q, Scalar::one(f), {"a", "d", "a"}));
    r2.terms.push_back(term(q, Scalar::one(f), {"d", "a", "d"}));
    BoundQuiverAlgebra A(f, q, {r1, r2});
    CHECK(A.dim() == 6);
    auto a = A.arrow_elt(0), d = A.arrow_elt(1);
    auto ad = A.mul(a, d);
    CHECK(!A.is_zero_elt(ad));
    CHECK(A.is_zero_elt(A.mul(ad, a)));
    /* reduce of a long path folds arrow by arrow */
    Path longp = make_path(q, {0, 1, 0, 1});
    CHECK(A.is_zero_elt(A.reduce_path(longp)));
}

TEST_CASE("star quiver with one mixed-length relation") {
    /* two length-2 arms, one length-3 arm, relation z + x + y with
       z of length 3: exercises the saturation pass (mixed path lengths) */
    Field f = Field::rationals();
    Quiver q({"0", "w", "a1", "b1", "c1", "c2"},
             {{"x2", 1, 2}, {"x1", 2, 0},
              {"y2", 1, 3}, {"y1", 3, 0},
              {"z3", 1, 4}, {"z2", 4, 5}, {"z1", 5, 0}});
    PathElement r;
    r.terms.push_back(term(q, Scalar::one(f), {"z3", "z2", "z1"}));
    r.terms.push_back(term(q, Scalar::one(f), {"x2", "x1"}));
    r.terms.push_back(term(q, Scalar::one(f), {"y2", "y1"}));
    BoundQuiverAlgebra A(f, q, {r});
    CHECK(A.dim() == 17);
    CHECK(A.block_dim(1, 0) == 2);  // the two surviving arm paths
    auto zzz = A.reduce(make_relation(q, {term(q, Scalar::one(f), {"z3", "z2", "z1"})}));
    auto xx = A.reduce(make_relation(q, {term(q, Scalar::one(f), {"x2", "x1"})}));
    auto yy = A.reduce(make_relation(q, {term(q, Scalar::one(f), {"y2", "y1"})}));
    CHECK(zzz == A.sub(A.zero(), A.add(xx, yy)));
}

TEST_CASE("opposite algebra") {
    Field f = Field::rationals();
    Quiver q({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}});
    PathElement r;
    r.terms.push_back(term(q, Scalar::one(f), {"a", "b"}));
    BoundQuiverAlgebra A(f, q, {r});
    BoundQuiverAlgebra Aop = A.opposite();
    CHECK(Aop.dim() == A.dim());
    CHECK(Aop.block_dim(2, 0) == A.block_dim(0, 2));
    CHECK(Aop.quiver().arrow(0).from == 1);
}

TEST_CASE("algebra over GF(5)") {
    Field f = Field::prime(5);
    BoundQuiverAlgebra A(f, kronecker(), {});
    CHECK(A.dim() == 4);
    auto a = A.arrow_elt(0);
    auto s = A.scale(Scalar(f, 5), a);
    CHECK(A.is_zero_elt(s));
}

TEST_CASE("non-admissible input is rejected") {
    Field f = Field::rationals();
    Quiver loop({"1"}, {{"a", 0, 0}});
    CHECK_THROWS_AS(BoundQuiverAlgebra(f, loop, {}, 10), Error);
}

TEST_CASE("associativity spot check") {
    Field f = Field::rationals();
    Quiver q({"1", "2"}, {{"a", 0, 1}, {"d", 1, 0}});
    PathElement r1, r2;
    r1.terms.push_back(term(q, Scalar::one(f), {"a", "d", "a"}));
    r2.terms.push_back(term(q, Scalar::one(f), {"d", "a", "d"}));
    BoundQuiverAlgebra A(f, q, {r1, r2});
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            for (int k = 0; k < A.dim(); ++k) {
                auto lhs = A.mul(A.mul_basis(i, j), A.basis_elt(k));
                auto rhs = A.mul(A.basis_elt(i), A.mul_basis(j, k));
                CHECK(lhs == rhs);
            }
}
