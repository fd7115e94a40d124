#include <doctest.h>

#include "maxsubfield/gn.hpp"
#include "maxsubfield/poly.hpp"
#include "maxsubfield/quaternion.hpp"
#include "oracles.hpp"

using namespace msf;

TEST_CASE("g_1(a, r) = r a - a r, expanded by hand") {
    Rng rng(71);
    for (const Field& f : {Field::rationals(), Field::prime(10007)}) {
        for (int rep = 0; rep < 25; ++rep) {
            int n = 1 + static_cast<int>(rng.below(4));
            Matrix a = Matrix::random(n, f, rng), r = Matrix::random(n, f, rng);
            std::vector<Matrix> rs = {r};
            CHECK(eval_gn(a, rs) == r * a - a * r);
        }
    }
}

TEST_CASE("central elements satisfy g_n for every n >= 1") {
    Field f = Field::prime(10007);
    Rng rng(72);
    Matrix central = Matrix::identity(3, f).scale(f.from_int(7));
    for (int n = 1; n <= 3; ++n) {
        std::vector<Matrix> rs;
        for (int i = 0; i < n; ++i) rs.push_back(Matrix::random(3, f, rng));
        CHECK(eval_gn(central, rs).is_zero());
    }
}

TEST_CASE("SJT evaluation equals the naive lexicographic oracle") {
    Rng rng(73);
    for (const Field& f : {Field::rationals(), Field::prime(101)}) {
        for (int n = 1; n <= 4; ++n) {
            for (int rep = 0; rep < 5; ++rep) {
                int size = 2 + static_cast<int>(rng.below(2));
                Matrix a = Matrix::random(size, f, rng);
                std::vector<Matrix> rs;
                for (int i = 0; i < n; ++i) rs.push_back(Matrix::random(size, f, rng));
                CHECK(eval_gn(a, rs) == oracles::eval_gn_naive(a, rs));
            }
        }
    }
}

TEST_CASE("partitioned permutation ranges merge to the same value") {
    Field f = Field::prime(10007);
    Rng rng(74);
    Matrix a = Matrix::random(3, f, rng);
    std::vector<Matrix> rs;
    for (int i = 0; i < 3; ++i) rs.push_back(Matrix::random(3, f, rng));
    std::size_t total = 24;  // (3+1)!
    Matrix whole = oracles::eval_gn_lex_range(a, rs, 0, total);
    for (std::size_t cut : {1ul, 7ul, 12ul, 23ul}) {
        Matrix left = oracles::eval_gn_lex_range(a, rs, 0, cut);
        Matrix right = oracles::eval_gn_lex_range(a, rs, cut, total);
        CHECK(left + right == whole);
    }
    CHECK(eval_gn(a, rs) == whole);
}

TEST_CASE("idempotents collide powers and kill g_n for n >= 2") {
    Field f = Field::prime(10007);
    Rng rng(75);
    // projection diag(1,1,0) and a conjugated version
    Matrix proj = Matrix::diagonal(f, {f.one(), f.one(), f.zero()});
    Matrix g = Matrix::random_invertible(3, f, rng);
    Matrix conj = g * proj * g.inverse();
    for (const Matrix& a : {proj, conj}) {
        CHECK((a * a) == a);
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<Matrix> rs = {Matrix::random(3, f, rng), Matrix::random(3, f, rng)};
            CHECK(eval_gn(a, rs).is_zero());
        }
    }
}

TEST_CASE("degree_at_most matches exact minimal-polynomial degrees") {
    Field f = Field::prime(10007);

    DegreeTestResult id1 = degree_at_most(Matrix::identity(2, f), 1, 10, kDefaultSeed);
    CHECK(id1.verdict == DegreeVerdict::probably_at_most);
    CHECK(id1.trials_run == 10);

    // P_4-style block with a = (2, 3): exact degree 4, so level 3 must fail
    Matrix p4(4, f);
    p4.at(0, 0) = f.from_int(2);
    p4.at(0, 1) = f.one();
    p4.at(1, 1) = f.from_int(-2);
    p4.at(2, 2) = f.from_int(3);
    p4.at(2, 3) = f.one();
    p4.at(3, 3) = f.from_int(-3);
    DegreeTestResult too_low = degree_at_most(p4, 3, 10, kDefaultSeed);
    CHECK(too_low.verdict == DegreeVerdict::certainly_greater);
    REQUIRE(too_low.witness.has_value());
    CHECK(!eval_gn(p4, *too_low.witness).is_zero());

    DegreeTestResult diag2 = degree_at_most(Matrix::diagonal(f, {f.one(), f.from_int(2)}), 2, 10, kDefaultSeed);
    CHECK(diag2.verdict == DegreeVerdict::probably_at_most);
}

TEST_CASE("degree_at_most over Q with the x^3 - 2 companion matrix") {
    Field q = Field::rationals();
    Matrix c = Matrix::companion(q, {q.from_int(-2), q.zero(), q.zero()});
    CHECK(degree_at_most(c, 2, 10, kDefaultSeed).verdict == DegreeVerdict::certainly_greater);
    CHECK(degree_at_most(c, 3, 10, kDefaultSeed).verdict == DegreeVerdict::probably_at_most);
}

TEST_CASE("factorial guard on large n") {
    Field f = Field::prime(101);
    Matrix a = Matrix::identity(2, f);
    std::vector<Matrix> rs(9, a);
    CHECK_THROWS_AS(eval_gn(a, rs), math_error);
    CHECK(eval_gn(a, rs, true).is_zero());  // identity has degree 1
}

TEST_CASE("non-vanishing witness search") {
    Field f = Field::prime(10007);
    // f = x1 at level 1: any non-central invertible value works
    NonvanishingResult direct =
        gn_nonvanishing_witness(LaurentExpr::parse("x1", f), 1, 2, f, 200, kDefaultSeed);
    CHECK(direct.found);
    CHECK(!direct.value->is_zero());
    CHECK(evaluate(LaurentExpr::parse("x1", f), direct.ys) == evaluate(LaurentExpr::parse("x1", f), direct.ys));

    // commutator at level 1 over M_2
    NonvanishingResult comm =
        gn_nonvanishing_witness(LaurentExpr::parse("x1*x2 - x2*x1", f), 1, 2, f, 200, kDefaultSeed);
    CHECK(comm.found);
    REQUIRE(comm.value.has_value());
    CHECK(!comm.value->is_zero());
    // re-derive: g_1(f(ys), xs) must equal the reported value
    Matrix v = evaluate(LaurentExpr::parse("x1*x2 - x2*x1", f), comm.ys);
    CHECK(eval_gn(v, comm.xs) == *comm.value);

    // x1 at level 2 over M_2: Cayley-Hamilton forces vanishing, search exhausts
    NonvanishingResult exhausted =
        gn_nonvanishing_witness(LaurentExpr::parse("x1", f), 2, 2, f, 50, kDefaultSeed);
    CHECK(!exhausted.found);
    CHECK(exhausted.attempts == 50);
}

TEST_CASE("g_n on quaternions through the shared ring interface") {
    Field q = Field::rationals();
    auto H = QuaternionAlgebra::create(q, q.from_int(-1), q.from_int(-1));
    // i has degree 2: g_1(i, r) nonzero for some r, g_2(i, ...) = 0 always
    std::vector<Quaternion> r1 = {H->j()};
    CHECK(eval_gn(H->i(), r1) == H->j() * H->i() - H->i() * H->j());
    Rng rng(76);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Quaternion> rs = {H->random(rng), H->random(rng)};
        CHECK(eval_gn(H->i(), rs).is_zero());
    }
}
