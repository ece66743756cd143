#include "doctest.h"
#include "quivkit/matrix.hpp"

using namespace qk;

static Matrix from(const Field& f, int r, int c, std::vector<long> vals) {
    Matrix m(f, r, c);
    int k = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(f, vals[k++]);
    return m;
}

TEST_CASE("scalar arithmetic over Q and GF(p)") {
    Field q = Field::rationals();
    Scalar a(q, 2, 3), b(q, 1, 6);
    CHECK((a + b) == Scalar(q, 5, 6));
    CHECK((a * b) == Scalar(q, 1, 9));
    CHECK((a / b) == Scalar(q, 4));

    Field f5 = Field::prime(5);
    Scalar x(f5, 3), y(f5, 4);
    CHECK((x + y) == Scalar(f5, 2));
    CHECK((x * y) == Scalar(f5, 2));
    CHECK(x.inverse() == Scalar(f5, 2));
    CHECK(Scalar(f5, 1, 2) == Scalar(f5, 3));  // 1/2 = 3 mod 5
}

TEST_CASE("rref, rank, nullspace over Q") {
    Field q = Field::rationals();
    Matrix m = from(q, 3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 1, 1, 1, 1});
    CHECK(m.rank() == 2);
    Matrix ns = m.nullspace();
    CHECK(ns.cols() == 2);
    CHECK((m * ns).is_zero());
}

TEST_CASE("solve and inverse") {
    Field q = Field::rationals();
    Matrix a = from(q, 2, 2, {1, 2, 3, 5});
    Matrix b = from(q, 2, 1, {1, 2});
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK((a * *x) == b);
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((a * *inv) == Matrix::identity(q, 2));
    CHECK(a.det() == Scalar(q, -1));

    Matrix sing = from(q, 2, 2, {1, 2, 2, 4});
    CHECK(!sing.inverse().has_value());
    Matrix bad = from(q, 2, 1, {1, 1});
    CHECK(!sing.solve(bad).has_value());
}

TEST_CASE("linear algebra over GF(7)") {
    Field f = Field::prime(7);
    Matrix a = from(f, 2, 2, {1, 2, 3, 5});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((a * *inv) == Matrix::identity(f, 2));
    Matrix m = from(f, 2, 3, {1, 2, 3, 8, 16, 24});  // second row = first mod 7
    CHECK(m.rank() == 1);
    CHECK(m.nullspace().cols() == 2);
}
