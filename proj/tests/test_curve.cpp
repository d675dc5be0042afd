#include <doctest.h>

#include "grex/curve.hpp"
#include "grex/error.hpp"
#include "grex/torsion.hpp"

using namespace grex;

namespace {

Curve curve47() { return Curve::supersingular(PrimeField::create(47)); }

// Counts affine points by Euler's criterion over every x, plus O.
mpz_class count_points(const Curve &c) {
    const auto &f = c.field();
    const long p = f->modulus().get_si();
    const mpz_class half = (mpz_class(p) * p - 1) / 2;
    mpz_class n = 1;
    for (long x0 = 0; x0 < p; ++x0) {
        for (long x1 = 0; x1 < p; ++x1) {
            Fp2Element x(f, x0, x1);
            Fp2Element rhs = x * x * x + c.a() * x + c.b();
            if (rhs.is_zero())
                n += 1;
            else if (rhs.pow(half).is_one())
                n += 2;
        }
    }
    return n;
}

} // namespace

TEST_CASE("membership") {
    Curve c = curve47();
    auto f = c.field();
    CHECK(c.is_on_curve(Point::identity()));
    CHECK(c.is_on_curve(Point(Fp2Element::zero(f), Fp2Element::zero(f))));
    CHECK_FALSE(c.is_on_curve(Point(Fp2Element::one(f), Fp2Element::one(f))));
    try {
        (void)c.point(Fp2Element::one(f), Fp2Element::one(f));
        FAIL("off-curve point built");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::OffCurve);
    }
}

TEST_CASE("point counts") {
    Curve c = curve47();
    CHECK(count_points(c) == 2304);
    Curve c107 = Curve::supersingular(PrimeField::create(107));
    CHECK(count_points(c107) == 108 * 108);
}

TEST_CASE("group law basics") {
    Curve c = curve47();
    auto f = c.field();
    Point t(Fp2Element::zero(f), Fp2Element::zero(f));
    CHECK(c.add(t, t).is_identity());
    CHECK(point_lpower_order(t, 2, 4, c) == 1);
    CHECK(point_lpower_order(Point::identity(), 2, 4, c) == 0);

    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        Point p = c.random_point(rng);
        REQUIRE(c.is_on_curve(p));
        REQUIRE(c.add(p, Point::identity()) == p);
        REQUIRE(c.add(p, c.neg(p)).is_identity());
        REQUIRE(c.scalar_mul(1, p) == p);
        REQUIRE(c.scalar_mul(0, p).is_identity());
        REQUIRE(c.scalar_mul(2304, p).is_identity());
        REQUIRE(c.scalar_mul(-5, p) == c.neg(c.scalar_mul(5, p)));
        REQUIRE(c.add(p, p) == c.dbl_unchecked(p));
    }
}

TEST_CASE("associativity, commutativity, distributivity") {
    for (mpz_class prime : {mpz_class(47), mpz_class(107)}) {
        Curve c = Curve::supersingular(PrimeField::create(prime));
        Rng rng(2);
        const mpz_class order = (prime + 1) * (prime + 1);
        for (int i = 0; i < 500; ++i) {
            Point a = c.random_point(rng), b = c.random_point(rng), d = c.random_point(rng);
            REQUIRE(c.add(c.add(a, b), d) == c.add(a, c.add(b, d)));
            REQUIRE(c.add(a, b) == c.add(b, a));
            mpz_class k = random_below(order, rng), m = random_below(order, rng);
            REQUIRE(c.scalar_mul(k + m, a) == c.add(c.scalar_mul(k, a), c.scalar_mul(m, a)));
        }
    }
}

TEST_CASE("checked operations reject off-curve input") {
    Curve c = curve47();
    auto f = c.field();
    Point bad(Fp2Element::one(f), Fp2Element::one(f));
    CHECK_THROWS_AS(c.add(bad, Point::identity()), Error);
    CHECK_THROWS_AS(c.scalar_mul(3, bad), Error);
}

TEST_CASE("l-power order") {
    auto ctx = TorsionContext::supersingular(47, 2, 4, 3);
    const Curve &c = ctx.curve();
    Rng rng(4);
    auto basis = find_basis(ctx, rng);
    CHECK(point_lpower_order(basis.p_gen, 2, 4, c) == 4);
    CHECK_FALSE(c.scalar_mul(8, basis.p_gen).is_identity());
    CHECK(c.scalar_mul(16, basis.p_gen).is_identity());
    CHECK(point_lpower_order(c.scalar_mul(4, basis.q_gen), 2, 4, c) == 2);

    // A point of order divisible by 3 is outside E[16].
    Point outside = c.random_point(rng);
    while (c.scalar_mul(16, outside).is_identity())
        outside = c.random_point(rng);
    try {
        (void)point_lpower_order(outside, 2, 4, c);
        FAIL("point outside the torsion accepted");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::NotInTorsion);
    }
}

TEST_CASE("full-order points appear after projection") {
    auto ctx = TorsionContext::supersingular(47, 2, 4, 3);
    Rng rng(9);
    bool seen = false;
    for (int i = 0; i < 1000 && !seen; ++i)
        seen = point_lpower_order(cofactor_project(ctx.curve().random_point(rng), ctx), 2, 4, ctx.curve()) == 4;
    CHECK(seen);
}
