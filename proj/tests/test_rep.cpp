#include "doctest.h"
#include "quivkit/rep.hpp"
#include "quivkit/structure_algebra.hpp"

using namespace qk;

namespace {

AlgebraPtr kronecker_algebra(const Field& f) {
    Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
    return std::make_shared<BoundQuiverAlgebra>(f, q, std::vector<PathElement>{});
}

/* regular homogeneous Kronecker module R_lambda: dims (1,1), a acts 1, b acts lambda */
Representation kron_reg(const AlgebraPtr& A, const Scalar& lam) {
    Matrix ma(A->field(), 1, 1), mb(A->field(), 1, 1);
    ma.at(0, 0) = Scalar::one(A->field());
    mb.at(0, 0) = lam;
    return Representation(A, {1, 1}, {ma, mb});
}

}  // namespace

TEST_CASE("projectives and injectives over the Kronecker algebra") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    auto P1 = projective(A, 0), P2 = projective(A, 1);
    CHECK(P1.dims() == std::vector<int>{1, 2});
    CHECK(P2.dims() == std::vector<int>{0, 1});
    CHECK(P1.check_relations());
    auto I1 = injective(A, 0), I2 = injective(A, 1);
    CHECK(I1.dims() == std::vector<int>{1, 0});
    CHECK(I2.dims() == std::vector<int>{2, 1});
    /* dim Hom(P(x), M) = dim M_x,  dim Hom(M, I(x)) = dim M_x */
    auto M = kron_reg(A, Scalar(f, 5));
    CHECK(hom_dim(P1, M) == M.dim(0));
    CHECK(hom_dim(P2, M) == M.dim(1));
    CHECK(hom_dim(M, I1) == M.dim(0));
    CHECK(hom_dim(M, I2) == M.dim(1));
    CHECK(is_projective_rep(P1));
    CHECK(is_projective_rep(direct_sum({P1, P2})));
    CHECK(!is_projective_rep(M));
    CHECK(is_injective_rep(I2, nullptr));
    CHECK(!is_injective_rep(M, nullptr));
}

TEST_CASE("hom spaces between Kronecker regulars") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    auto M = kron_reg(A, Scalar(f, 2)), N = kron_reg(A, Scalar(f, 3));
    CHECK(hom_dim(M, M) == 1);
    CHECK(hom_dim(M, N) == 0);
    CHECK(is_brick(M));
    CHECK(is_isomorphic(M, kron_reg(A, Scalar(f, 2))));
    CHECK(!is_isomorphic(M, N));
}

TEST_CASE("top, radical, socle") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    auto P1 = projective(A, 0);
    CHECK(top_dims(P1) == std::vector<int>{1, 0});
    CHECK(socle_dims(P1) == std::vector<int>{0, 2});
    auto T = top(P1);
    CHECK(T.dims() == std::vector<int>{1, 0});
    auto R = sub_rep(P1, radical_sub(P1));
    CHECK(R.dims() == std::vector<int>{0, 2});
}

TEST_CASE("sub/quotient round trip and closure") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    auto P1 = projective(A, 0);
    /* seed with the generator at vertex 0: closure is everything */
    std::vector<Matrix> seeds{Matrix::identity(f, 1), Matrix(f, 2, 0)};
    auto cl = span_closure(P1, seeds);
    CHECK(cl.total_dim() == 3);
    /* seed with one socle vector */
    Matrix v(f, 2, 1);
    v.at(0, 0) = Scalar::one(f);
    auto cl2 = span_closure(P1, {Matrix(f, 1, 0), v});
    CHECK(cl2.total_dim() == 1);
    Hom incl;
    auto S = sub_rep(P1, cl2, &incl);
    CHECK(S.dims() == std::vector<int>{0, 1});
    Hom proj;
    auto Q = quotient_rep(P1, cl2, &proj);
    CHECK(Q.total_dim() == 2);
    CHECK(Q.check_relations());
}

TEST_CASE("dual swaps projectives and injectives") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    auto Aop = std::make_shared<BoundQuiverAlgebra>(A->opposite());
    auto P1 = projective(A, 0);
    auto D = dual(P1, Aop);
    CHECK(D.check_relations());
    CHECK(is_isomorphic(D, injective(Aop, 0)));
}

TEST_CASE("decompose splits direct sums") {
    Field f = Field::rationals();
    auto A = kronecker_algebra(f);
    auto M = kron_reg(A, Scalar(f, 2)), N = kron_reg(A, Scalar(f, 3));
    SUBCASE("two non-isomorphic summands") {
        auto parts = decompose(direct_sum({M, N}));
        REQUIRE(parts.size() == 2);
        bool foundM = false, foundN = false;
        for (const auto& p : parts) {
            if (is_isomorphic(p, M)) foundM = true;
            if (is_isomorphic(p, N)) foundN = true;
        }
        CHECK(foundM);
        CHECK(foundN);
    }
    SUBCASE("isotypic square") {
        auto parts = decompose(direct_sum({M, M}));
        REQUIRE(parts.size() == 2);
        CHECK(is_isomorphic(parts[0], M));
        CHECK(is_isomorphic(parts[1], M));
    }
    SUBCASE("indecomposable stays whole") {
        auto parts = decompose(projective(A, 0));
        REQUIRE(parts.size() == 1);
    }
    SUBCASE("M + M is never a brick") {
        CHECK(!is_brick(direct_sum({M, M})));
    }
    SUBCASE("simples at distinct vertices") {
        auto parts = decompose(direct_sum({simple(A, 0), simple(A, 1)}));
        REQUIRE(parts.size() == 2);
    }
}

TEST_CASE("structure constant algebra sanity") {
    Field f = Field::rationals();
    /* 2x2 upper triangular matrices */
    auto E = [&](int i, int j) {
        Matrix m(f, 2, 2);
        m.at(i, j) = Scalar::one(f);
        return m;
    };
    StructureConstantAlgebra T =
        StructureConstantAlgebra::from_matrices(f, {E(0, 0), E(0, 1), E(1, 1)}, Matrix::identity(f, 2));
    CHECK(T.dim() == 3);
    CHECK(T.check_associativity());
    auto rad = T.radical_basis();
    CHECK(rad.size() == 1);
    auto Z = T.center_basis();
    CHECK(Z.size() == 1);
    auto Q = quotient_algebra(T, span_of_vecs(f, 3, rad));
    CHECK(Q.algebra.dim() == 2);
    CHECK(Q.algebra.radical_basis().empty());
}

TEST_CASE("rational roots") {
    Field f = Field::rationals();
    /* (t - 2)(t + 1/3)(t) = t^3 - (5/3)t^2 - (2/3)t */
    std::vector<Scalar> p{Scalar(f, 0), Scalar(f, -2, 3), Scalar(f, -5, 3), Scalar(f, 1)};
    bool complete = true;
    auto roots = rational_roots(f, p, &complete);
    CHECK(complete);
    REQUIRE(roots.size() == 3);
    /* irreducible t^2 + 1 has no rational roots */
    std::vector<Scalar> q{Scalar(f, 1), Scalar(f, 0), Scalar(f, 1)};
    CHECK(rational_roots(f, q, &complete).empty());
}
