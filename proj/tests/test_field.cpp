#include <doctest.h>

#include "grex/error.hpp"
#include "grex/field.hpp"

using namespace grex;

namespace {

FieldRef f47() { return PrimeField::create(47); }

Fp2Element nonzero(const FieldRef &f, Rng &rng) {
    for (;;) {
        Fp2Element a = Fp2Element::random(f, rng);
        if (!a.is_zero())
            return a;
    }
}

} // namespace

TEST_CASE("prime field construction") {
    CHECK_NOTHROW(PrimeField(47));
    CHECK_NOTHROW(PrimeField(107));
    CHECK_THROWS_AS(PrimeField(45), Error);
    try {
        PrimeField bad(49);
        FAIL("composite accepted");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::NotPrime);
    }
    // 13 = 1 mod 4 has no i.
    CHECK_THROWS_AS(PrimeField(13), Error);
}

TEST_CASE("fp2 small examples over 47") {
    auto f = f47();
    CHECK(Fp2Element::one(f) * Fp2Element::one(f) == Fp2Element::one(f));
    Fp2Element i(f, 0, 1);
    CHECK(i * i == Fp2Element(f, 46, 0));
    CHECK(Fp2Element(f, 3, 5) + Fp2Element(f, 44, 43) == Fp2Element(f, 0, 1));
    CHECK(Fp2Element(f, 2).inv() == Fp2Element(f, 24));
    CHECK(Fp2Element::one(f).inv() == Fp2Element::one(f));
    CHECK(Fp2Element(f, -1, 50) == Fp2Element(f, 46, 3));
}

TEST_CASE("inverse round trip") {
    for (mpz_class p : {mpz_class(47), mpz_class(107)}) {
        auto f = PrimeField::create(p);
        Rng rng(7);
        for (int t = 0; t < 1000; ++t) {
            Fp2Element a = nonzero(f, rng);
            REQUIRE((a * a.inv()).is_one());
            REQUIRE(a / a == Fp2Element::one(f));
        }
    }
}

TEST_CASE("zero has no inverse") {
    auto f = f47();
    try {
        (void)Fp2Element::zero(f).inv();
        FAIL("zero inverted");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("mixing fields is refused") {
    auto a = Fp2Element(f47(), 1, 1);
    auto b = Fp2Element(PrimeField::create(107), 1, 1);
    try {
        (void)(a + b);
        FAIL("mixed moduli accepted");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::ModulusMismatch);
    }
    CHECK_THROWS_AS((void)(a * b), Error);
}

TEST_CASE("pow") {
    auto f = f47();
    Rng rng(11);
    const mpz_class group = 47 * 47 - 1;
    for (int t = 0; t < 50; ++t) {
        Fp2Element a = nonzero(f, rng);
        CHECK(a.pow(0).is_one());
        CHECK(a.pow(group).is_one());
        CHECK(a.pow(-1) == a.inv());
        CHECK(a.pow(47) == a.conj()); // Frobenius
    }

    // A generator of F_{47^2}^* has order exactly 2208 = 2^5 * 3 * 23.
    Fp2Element gen;
    for (;;) {
        Fp2Element a = nonzero(f, rng);
        if (!a.pow(group / 2).is_one() && !a.pow(group / 3).is_one() && !a.pow(group / 23).is_one()) {
            gen = a;
            break;
        }
    }
    Fp2Element g = gen.pow(group / 16);
    CHECK(g.pow(16).is_one());
    CHECK_FALSE(g.pow(8).is_one());
}

TEST_CASE("power of a product") {
    auto f = PrimeField::create(107);
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        Fp2Element a = Fp2Element::random(f, rng);
        Fp2Element b = Fp2Element::random(f, rng);
        mpz_class k = random_below(mpz_class(107 * 107), rng);
        REQUIRE((a * b).pow(k) == a.pow(k) * b.pow(k));
    }
}

TEST_CASE("sqrt") {
    auto f = f47();
    CHECK(*Fp2Element::zero(f).sqrt() == Fp2Element::zero(f));
    CHECK(*Fp2Element::one(f).sqrt() == Fp2Element::one(f));
    CHECK(*Fp2Element(f, 4).sqrt() == Fp2Element(f, 2));
    // -1 is a non-residue in F_47 but i squares to it.
    CHECK(*Fp2Element(f, 46).sqrt() == Fp2Element(f, 0, 1));

    Rng rng(5);
    unsigned squares = 0;
    for (int t = 0; t < 1000; ++t) {
        Fp2Element a = Fp2Element::random(f, rng);
        // Euler's criterion in F_{p^2} as an independent oracle.
        const bool euler = a.is_zero() || a.pow((47 * 47 - 1) / 2).is_one();
        REQUIRE(a.is_square() == euler);
        auto s = a.sqrt();
        REQUIRE(s.has_value() == euler);
        if (!s)
            continue;
        ++squares;
        REQUIRE(*s * *s == a);
        Fp2Element other = -*s;
        const bool smaller = s->c0() < other.c0() || (s->c0() == other.c0() && s->c1() <= other.c1());
        REQUIRE(smaller);
    }
    CHECK(squares > 400);
    CHECK(squares < 600);
}

TEST_CASE("op counters") {
    auto f = f47();
    reset_op_counts();
    Fp2Element a(f, 3, 4);
    (void)(a * a);
    (void)a.inv();
    CHECK(op_counts().fp2_mul == 1);
    CHECK(op_counts().fp2_inv == 1);
    reset_op_counts();
    CHECK(op_counts().fp2_mul == 0);
}
