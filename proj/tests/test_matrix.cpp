#include <doctest.h>

#include "maxsubfield/matrix.hpp"

using namespace msf;

namespace {
Matrix from_ints(const Field& f, int n, std::initializer_list<long long> vals) {
    Matrix m(n, f);
    auto it = vals.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = f.from_int(*it++);
    return m;
}
}  // namespace

TEST_CASE("block_diag places blocks on the diagonal") {
    Field q = Field::rationals();
    Matrix a1 = from_ints(q, 2, {2, 1, 0, -2});
    Matrix pad = Matrix::zero(1, q);
    Matrix p3 = Matrix::block_diag({a1, pad});
    CHECK(p3.size() == 3);
    Matrix expected = from_ints(q, 3, {2, 1, 0, 0, -2, 0, 0, 0, 0});
    CHECK(p3 == expected);
}

TEST_CASE("inverse of diag(2, 1/2) is diag(1/2, 2)") {
    Field q = Field::rationals();
    Matrix d = Matrix::diagonal(q, {q.from_int(2), q.parse_element("1/2")});
    Matrix inv = d.inverse();
    CHECK(inv == Matrix::diagonal(q, {q.parse_element("1/2"), q.from_int(2)}));
    CHECK((d * inv).is_identity());
}

TEST_CASE("the 2x2 spectrum block has trace zero away from characteristic 2") {
    for (const Field& f : {Field::rationals(), Field::prime(10007)}) {
        Matrix a(2, f);
        a.at(0, 0) = f.from_int(5);
        a.at(0, 1) = f.one();
        a.at(1, 1) = -f.from_int(5);
        CHECK(a.trace().is_zero());
    }
}

TEST_CASE("matrix product, transpose, powers") {
    Field q = Field::rationals();
    Matrix a = from_ints(q, 2, {1, 2, 3, 4});
    Matrix b = from_ints(q, 2, {0, 1, 1, 0});
    CHECK(a * b == from_ints(q, 2, {2, 1, 4, 3}));
    CHECK(b * a == from_ints(q, 2, {3, 4, 1, 2}));
    CHECK(a.transpose() == from_ints(q, 2, {1, 3, 2, 4}));
    CHECK(a.pow(0).is_identity());
    CHECK(a.pow(3) == a * a * a);
    Matrix d = Matrix::diagonal(q, {q.from_int(2), q.from_int(4)});
    CHECK(d.pow(-2) == Matrix::diagonal(q, {q.parse_element("1/4"), q.parse_element("1/16")}));
}

TEST_CASE("determinant and inverse over F_p") {
    Field f = Field::prime(10007);
    Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        Matrix m = Matrix::random_invertible(3, f, rng);
        CHECK(!m.det().is_zero());
        CHECK((m * m.inverse()).is_identity());
        CHECK((m.inverse() * m).is_identity());
    }
    Matrix singular(2, f);
    singular.at(0, 0) = f.one();
    singular.at(1, 0) = f.one();
    CHECK(singular.det().is_zero());
    CHECK_THROWS_AS(singular.inverse(), math_error);
}

TEST_CASE("determinant is multiplicative") {
    Field f = Field::prime(101);
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        Matrix a = Matrix::random(3, f, rng), b = Matrix::random(3, f, rng);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("solve_linear on a nonsingular system") {
    Field q = Field::rationals();
    Matrix a = from_ints(q, 2, {2, 1, 1, 3});
    std::vector<FieldElement> b = {q.from_int(5), q.from_int(10)};
    auto x = solve_linear(a, b);
    CHECK(x[0] == q.from_int(1));
    CHECK(x[1] == q.from_int(3));
    Matrix singular = from_ints(q, 2, {1, 1, 1, 1});
    CHECK_THROWS_AS(solve_linear(singular, b), math_error);
}

TEST_CASE("solve_any finds consistent solutions and detects inconsistency") {
    Field q = Field::rationals();
    Matrix a = from_ints(q, 2, {1, 1, 2, 2});
    auto consistent = solve_any(a, {q.from_int(3), q.from_int(6)});
    REQUIRE(consistent.has_value());
    CHECK((*consistent)[0] + (*consistent)[1] == q.from_int(3));
    CHECK(!solve_any(a, {q.from_int(3), q.from_int(7)}).has_value());
}

TEST_CASE("companion matrix shape") {
    Field q = Field::rationals();
    // x^3 - 2
    Matrix c = Matrix::companion(q, {q.from_int(-2), q.zero(), q.zero()});
    CHECK(c == from_ints(q, 3, {0, 0, 2, 1, 0, 0, 0, 1, 0}));
}

TEST_CASE("dimension and field mismatches are rejected") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(Matrix::identity(2, q) * Matrix::identity(3, q), math_error);
    CHECK_THROWS_AS(Matrix::identity(2, q) + Matrix::identity(2, Field::prime(7)), math_error);
    CHECK_THROWS_AS(solve_linear(Matrix::identity(2, q), {q.one()}), math_error);
}

TEST_CASE("scalar detection") {
    Field f = Field::prime(7);
    CHECK(Matrix::identity(3, f).is_scalar());
    CHECK(Matrix::identity(3, f).scale(f.from_int(4)).is_scalar());
    CHECK(!Matrix::unit(2, f, 1, 2).is_scalar());
    CHECK(Matrix::zero(2, f).is_scalar());
}
