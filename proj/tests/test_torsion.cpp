#include <doctest.h>

#include <set>
#include <string>
#include <tuple>

#include "grex/error.hpp"
#include "grex/torsion.hpp"

using namespace grex;

namespace {

TorsionContext ctx47() { return TorsionContext::supersingular(47, 2, 4, 3); }

Point random_torsion(const TorsionContext &ctx, Rng &rng) { return cofactor_project(ctx.curve().random_point(rng), ctx); }

} // namespace

TEST_CASE("context validation") {
    CHECK_NOTHROW(TorsionContext::supersingular(107, 3, 3, 4));
    try {
        (void)TorsionContext::supersingular(47, 2, 3, 6);
        FAIL("cofactor divisible by l accepted");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::BadParams);
    }
    CHECK_THROWS_AS(TorsionContext::supersingular(47, 4, 1, 12), Error);
    CHECK_THROWS_AS(TorsionContext::supersingular(47, 2, 0, 48), Error);
    // 47 + 1 != 2^4 * 5
    CHECK_THROWS_AS(TorsionContext::supersingular(47, 2, 4, 5), Error);
}

TEST_CASE("pairing properties") {
    auto ctx = ctx47();
    const Curve &c = ctx.curve();
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
        Point p = random_torsion(ctx, rng);
        Point q = random_torsion(ctx, rng);
        REQUIRE(weil_pairing(p, p, ctx).is_one());
        REQUIRE(weil_pairing(p, Point::identity(), ctx).is_one());
        REQUIRE((weil_pairing(p, q, ctx) * weil_pairing(q, p, ctx)).is_one());
        REQUIRE(weil_pairing(p, q, ctx).pow(16).is_one());
    }
    for (int t = 0; t < 100; ++t) {
        Point p = random_torsion(ctx, rng);
        Point q = random_torsion(ctx, rng);
        mpz_class a = random_below(16, rng), b = random_below(16, rng);
        REQUIRE(weil_pairing(c.scalar_mul(a, p), c.scalar_mul(b, q), ctx) ==
                weil_pairing(p, q, ctx).pow(a * b));
    }
}

TEST_CASE("pairing rejects points outside the torsion") {
    auto ctx = ctx47();
    Rng rng(8);
    Point r = ctx.curve().random_point(rng);
    while (ctx.in_torsion(r))
        r = ctx.curve().random_point(rng);
    try {
        (void)weil_pairing(r, random_torsion(ctx, rng), ctx);
        FAIL("pairing accepted a point outside E[16]");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::NotInTorsion);
    }
}

TEST_CASE("cofactor projection") {
    auto ctx = ctx47();
    const Curve &c = ctx.curve();
    CHECK(cofactor_project(Point::identity(), ctx).is_identity());
    Rng rng(13);
    unsigned full = 0;
    for (int t = 0; t < 1000; ++t) {
        Point r = random_torsion(ctx, rng);
        REQUIRE(c.scalar_mul(16, r).is_identity());
        full += point_lpower_order(r, 2, 4, c) == 4;
    }
    CHECK(full >= 500);
}

TEST_CASE("independence") {
    auto ctx = ctx47();
    const Curve &c = ctx.curve();
    Rng rng(17);
    auto basis = find_basis(ctx, rng);
    CHECK(is_independent(basis.p_gen, basis.q_gen, ctx));
    CHECK_FALSE(is_independent(basis.p_gen, basis.p_gen, ctx));
    CHECK_FALSE(is_independent(basis.p_gen, c.scalar_mul(3, basis.p_gen), ctx));
    CHECK(basis.pairing == weil_pairing(basis.p_gen, basis.q_gen, ctx));

    std::set<std::tuple<std::string, std::string, std::string, std::string>> seen;
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            Point s = c.add(c.scalar_mul(a, basis.p_gen), c.scalar_mul(b, basis.q_gen));
            if (s.is_identity()) {
                seen.insert({"O", "", "", ""});
                continue;
            }
            seen.insert({s.x().c0().get_str(), s.x().c1().get_str(), s.y().c0().get_str(), s.y().c1().get_str()});
        }
    }
    CHECK(seen.size() == 256);
}

TEST_CASE("basis search") {
    auto ctx = ctx47();
    Rng rng(23);
    unsigned samples = 0;
    for (int t = 0; t < 100; ++t) {
        BasisSearchStats stats;
        auto basis = find_basis(ctx, rng, &stats);
        REQUIRE(point_lpower_order(basis.p_gen, 2, 4, ctx.curve()) == 4);
        REQUIRE(point_lpower_order(basis.q_gen, 2, 4, ctx.curve()) == 4);
        REQUIRE(!basis.pairing.pow(8).is_one());
        samples += stats.point_samples;
    }
    // Two stages, each geometric with success probability >= 1/2.
    CHECK(samples / 100.0 <= 4.0);

    auto ctx107 = TorsionContext::supersingular(107, 3, 3, 4);
    auto basis = find_basis(ctx107, rng);
    CHECK(point_lpower_order(basis.p_gen, 3, 3, ctx107.curve()) == 3);
    CHECK(point_lpower_order(basis.q_gen, 3, 3, ctx107.curve()) == 3);
    CHECK(basis.pairing.pow(27).is_one());
    CHECK_FALSE(basis.pairing.pow(9).is_one());
}

TEST_CASE("complete basis") {
    auto ctx = ctx47();
    const Curve &c = ctx.curve();
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        auto basis = find_basis(ctx, rng);
        Point k2 = complete_basis(basis.p_gen, ctx, rng);
        REQUIRE(point_lpower_order(k2, 2, 4, c) == 4);
        REQUIRE(is_independent(basis.p_gen, k2, ctx));
        REQUIRE_FALSE(weil_pairing(basis.p_gen, k2, ctx).pow(8).is_one());
    }
    auto basis = find_basis(ctx, rng);
    try {
        (void)complete_basis(c.scalar_mul(2, basis.p_gen), ctx, rng);
        FAIL("short-order point completed");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::OrderError);
    }
}
