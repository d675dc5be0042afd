#include <doctest.h>

#include <tuple>

#include "grex/dlog.hpp"
#include "grex/error.hpp"

using namespace grex;

TEST_CASE("dlog in mu_16") {
    auto ctx = TorsionContext::supersingular(47, 2, 4, 3);
    Rng rng(31);
    auto basis = find_basis(ctx, rng);
    const Fp2Element &g = basis.pairing;
    CHECK(dlog_prime_power(Fp2Element::one(ctx.field()), g, 2, 4) == 0);
    CHECK(dlog_prime_power(g, g, 2, 4) == 1);
    for (int t = 0; t < 100; ++t) {
        mpz_class x = random_below(16, rng);
        REQUIRE(dlog_prime_power(g.pow(x), g, 2, 4) == x);
    }
    try {
        (void)dlog_prime_power(g, g.pow(2), 2, 4);
        FAIL("base of order 8 accepted");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::BadParams);
    }
    // A cube root of unity is not in mu_16.
    Fp2Element w = Fp2Element::random(ctx.field(), rng);
    while (w.is_zero() || w.pow((47 * 47 - 1) / 3).is_one())
        w = Fp2Element::random(ctx.field(), rng);
    try {
        (void)dlog_prime_power(w.pow((47 * 47 - 1) / 3), g, 2, 4);
        FAIL("element outside the subgroup solved");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::NotInSubgroup);
    }
}

TEST_CASE("dlog in mu_27") {
    auto ctx = TorsionContext::supersingular(107, 3, 3, 4);
    Rng rng(37);
    auto basis = find_basis(ctx, rng);
    for (int t = 0; t < 100; ++t) {
        mpz_class x = random_below(27, rng);
        REQUIRE(dlog_prime_power(basis.pairing.pow(x), basis.pairing, 3, 3) == x);
    }
}

TEST_CASE("extended dlog") {
    for (auto [p, l, e, f] : {std::tuple{47, 2u, 4u, 3}, std::tuple{107, 3u, 3u, 4}}) {
        auto ctx = TorsionContext::supersingular(p, l, e, f);
        const Curve &c = ctx.curve();
        const mpz_class n = ctx.torsion_order();
        Rng rng(41);
        auto basis = find_basis(ctx, rng);
        auto zero = extended_dlog(Point::identity(), basis, ctx);
        CHECK(zero.k1 == 0);
        CHECK(zero.k2 == 0);
        auto unit = extended_dlog(basis.p_gen, basis, ctx);
        CHECK(unit.k1 == 1);
        CHECK(unit.k2 == 0);
        for (int t = 0; t < 200; ++t) {
            mpz_class a = random_below(3 * n, rng), b = random_below(3 * n, rng);
            Point k = c.add(c.scalar_mul(a, basis.p_gen), c.scalar_mul(b, basis.q_gen));
            auto dl = extended_dlog(k, basis, ctx);
            REQUIRE(dl.k1 == mod(a, n));
            REQUIRE(dl.k2 == mod(b, n));

            mpz_class a2 = random_below(n, rng), b2 = random_below(n, rng);
            Point k2 = c.add(c.scalar_mul(a2, basis.p_gen), c.scalar_mul(b2, basis.q_gen));
            auto sum = extended_dlog(c.add(k, k2), basis, ctx);
            auto dl2 = extended_dlog(k2, basis, ctx);
            REQUIRE(sum.k1 == mod(dl.k1 + dl2.k1, n));
            REQUIRE(sum.k2 == mod(dl.k2 + dl2.k2, n));
        }
    }
}
