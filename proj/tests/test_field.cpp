#include <doctest.h>

#include "maxsubfield/field.hpp"

using namespace msf;

TEST_CASE("primality check") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(10007));
    CHECK(is_prime_u64(10003) == false);  // 10003 = 7 * 1429
    CHECK(is_prime_u64(1) == false);
    CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne prime
    CHECK(is_prime_u64(1ull << 61) == false);
}

TEST_CASE("field descriptor parsing and printing") {
    CHECK(Field::parse("Q").kind() == FieldKind::rationals);
    CHECK(Field::parse("Fp:10007").prime() == 10007);
    CHECK(Field::parse("F2k:8").extension_degree() == 8);
    CHECK(Field::parse("Fpk:3:2").prime() == 3);
    CHECK(Field::parse("Fp:10007").to_string() == "Fp:10007");
    CHECK(Field::parse("F2k:8").to_string() == "F2k:8");
    CHECK_THROWS_AS(Field::parse("Fp:10006"), math_error);  // composite
    CHECK_THROWS_AS(Field::parse("nonsense"), math_error);
}

TEST_CASE("modulus sieve picks the smallest irreducible in the fixed order") {
    CHECK(smallest_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(smallest_irreducible(2, 3) == std::vector<std::uint64_t>{1, 1, 0, 1});
    CHECK(smallest_irreducible(2, 4) == std::vector<std::uint64_t>{1, 1, 0, 0, 1});
    // x^8 + x^4 + x^3 + x + 1
    CHECK(smallest_irreducible(2, 8) == std::vector<std::uint64_t>{1, 1, 0, 1, 1, 0, 0, 0, 1});
    CHECK(smallest_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(smallest_irreducible(5, 2) == std::vector<std::uint64_t>{2, 0, 1});
}

TEST_CASE("irreducibility rejects reducible moduli") {
    CHECK(is_irreducible_mod_p({1, 0, 1}, 2) == false);  // x^2 + 1 = (x+1)^2 over F_2
    CHECK(is_irreducible_mod_p({1, 1, 1}, 2));
    CHECK(is_irreducible_mod_p({0, 0, 0, 0, 1}, 2) == false);  // x^4
    CHECK_THROWS_AS(Field::extension_with_modulus(2, {1, 0, 1}), math_error);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    Field q = Field::rationals();
    FieldElement half = q.parse_element("1/2");
    FieldElement third = q.parse_element("1/3");
    CHECK((half + third).to_string() == "5/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half - half).is_zero());
    CHECK(half.inverse().to_string() == "2");
    CHECK(q.parse_element("4/6").to_string() == "2/3");
    CHECK(q.parse_element("-8/4").to_string() == "-2");
    CHECK_THROWS_AS(q.zero().inverse(), math_error);
}

TEST_CASE("Q to F_p coefficient reduction") {
    Field fp = Field::prime(10007);
    CHECK(fp.from_rational(mpq_class(1, 2)).residue() == 5004);
    CHECK(fp.from_rational(mpq_class(-1)).residue() == 10006);
    CHECK_THROWS_AS(fp.from_rational(mpq_class(1, 10007)), math_error);
    CHECK_THROWS_AS(fp.from_rational(mpq_class(3, 2 * 10007)), math_error);
}

static void check_field_axioms(const Field& f, std::uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < 200; ++i) {
        FieldElement a = f.random(rng), b = f.random(rng), c = f.random(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + f.zero() == a);
        CHECK(a * f.one() == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
    }
}

TEST_CASE("field axioms on random samples") {
    check_field_axioms(Field::rationals(), 1);
    check_field_axioms(Field::prime(10007), 2);
    check_field_axioms(Field::prime(2), 3);
    check_field_axioms(Field::extension(2, 8), 4);
    check_field_axioms(Field::extension(3, 2), 5);
}

TEST_CASE("extension field basics") {
    Field f = Field::extension(2, 8);
    CHECK(f.characteristic() == 2);
    CHECK(*f.size() == 256);
    // the residue class of x generates: x has multiplicative order dividing 255
    FieldElement g = f.element_at(2);
    CHECK(g.pow(255).is_one());
    CHECK(!g.pow(5).is_one());
    // Frobenius is additive: (a+b)^2 = a^2 + b^2 in characteristic 2
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        FieldElement a = f.random(rng), b = f.random(rng);
        CHECK((a + b).pow(2) == a.pow(2) + b.pow(2));
    }
}

TEST_CASE("element_at enumerates canonically") {
    Field f = Field::extension(2, 2);
    CHECK(f.element_at(0).is_zero());
    CHECK(f.element_at(1).is_one());
    CHECK(f.element_at(2).ext_coeffs() == std::vector<std::uint64_t>{0, 1});
    CHECK(f.element_at(3).ext_coeffs() == std::vector<std::uint64_t>{1, 1});
    CHECK_THROWS_AS(f.element_at(4), math_error);
    CHECK_THROWS_AS(Field::rationals().element_at(0), math_error);
}

TEST_CASE("exact square roots") {
    Field q = Field::rationals();
    CHECK(*q.parse_element("9/4").sqrt() == q.parse_element("3/2"));
    CHECK(!q.parse_element("2").sqrt().has_value());
    CHECK(!q.parse_element("-1").sqrt().has_value());

    Field fp = Field::prime(10007);
    Rng rng(11);
    int residues = 0;
    for (int i = 0; i < 100; ++i) {
        FieldElement a = fp.random(rng);
        FieldElement sq = a * a;
        auto r = sq.sqrt();
        REQUIRE(r.has_value());
        CHECK(*r * *r == sq);
        ++residues;
    }
    CHECK(residues == 100);
    // a known non-residue has none: 3 generates QR status via Euler's criterion
    FieldElement probe = fp.from_int(3);
    bool is_qr = probe.pow((10007 - 1) / 2).is_one();
    if (!is_qr) CHECK(!probe.sqrt().has_value());

    // characteristic 2: squaring is a bijection, everything has a root
    Field f256 = Field::extension(2, 8);
    for (int i = 0; i < 50; ++i) {
        FieldElement a = f256.random(rng);
        auto r = a.sqrt();
        REQUIRE(r.has_value());
        CHECK(*r * *r == a);
    }
}

TEST_CASE("mismatched fields refuse to mix") {
    Field q = Field::rationals();
    Field fp = Field::prime(7);
    CHECK_THROWS_AS(q.one() + fp.one(), math_error);
    CHECK_THROWS_AS(Field::prime(5).one() * fp.one(), math_error);
}
