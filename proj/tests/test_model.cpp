#include <doctest.h>

#include <algorithm>

#include "grex/error.hpp"
#include "grex/model.hpp"

using namespace grex;

namespace {

// v_ell(gcd(m, n)) capped at e, and log_ell of the order of (k0, k1).
unsigned val(std::int64_t a, unsigned ell, unsigned e) {
    if (a == 0)
        return e;
    unsigned v = 0;
    while (a % ell == 0) {
        a /= ell;
        ++v;
    }
    return v < e ? v : e;
}

unsigned log_order(std::int64_t k0, std::int64_t k1, unsigned ell, unsigned e) {
    const unsigned v = std::min(val(k0, ell, e), val(k1, ell, e));
    return e - v;
}

} // namespace

TEST_CASE("element orders") {
    ModelGroup g({16, 16});
    CHECK(g.order(g.identity()) == 1);
    CHECK(g.order(g.element({4, 6})) == 8);
    ModelGroup z12({12});
    CHECK(z12.order(z12.element({4})) == 3);
    CHECK(z12.element({-1}) == z12.element({11}));
    CHECK(g.mul(mpz_class(-3), g.element({1, 2})) == g.element({13, 10}));
    CHECK_THROWS_AS(ModelGroup({1}), Error);
}

TEST_CASE("generic root") {
    ModelGroup z12({12});
    CHECK(generic_root(z12.element({4}), 2, 0, z12) == z12.element({4}));
    ModelElement x = generic_root(z12.element({4}), 2, 2, z12);
    CHECK(x == z12.element({1}));
    CHECK(z12.mul(std::int64_t{4}, x) == z12.element({4}));
    try {
        (void)generic_root(z12.element({2}), 2, 2, z12);
        FAIL("non-power accepted");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::NotAPower);
    }

    ModelGroup g({48, 48});
    Rng rng(43);
    for (int t = 0; t < 500; ++t) {
        const unsigned r = 1 + t % 3;
        ModelElement base = g.element({static_cast<std::int64_t>(rng() % 48), static_cast<std::int64_t>(rng() % 48)});
        ModelElement h = g.mul(std::int64_t{1} << r, base);
        ModelElement root = generic_root(h, 2, r, g);
        REQUIRE(g.mul(std::int64_t{1} << r, root) == h);
    }

    // Mixed shape with an l-part of several sizes.
    ModelGroup mixed({8, 12, 9});
    for (int t = 0; t < 200; ++t) {
        ModelElement base = mixed.element({static_cast<std::int64_t>(rng() % 8), static_cast<std::int64_t>(rng() % 12),
                                           static_cast<std::int64_t>(rng() % 9)});
        ModelElement h = mixed.mul(std::int64_t{3}, base);
        REQUIRE(mixed.mul(std::int64_t{3}, generic_root(h, 3, 1, mixed)) == h);
    }
}

TEST_CASE("brute force search") {
    ModelTorsionGroup g(2, 4);
    auto hit = brute_force_grep(g.element(1, 0), 1, 0, 2, 4);
    REQUIRE(hit.has_value());
    CHECK(hit->first == g.element(1, 0));
    CHECK(g.is_independent(hit->first, hit->second));
    CHECK_FALSE(brute_force_grep(g.element(1, 0), 4, 4, 2, 4).has_value());

    auto found = brute_force_grep(g.element(4, 6), 2, 6, 2, 4);
    REQUIRE(found.has_value());
    CHECK(g.add(g.mul(2, found->first), g.mul(6, found->second)) == g.element(4, 6));

    try {
        (void)brute_force_grep(ModelElement{{0, 0}}, 1, 0, 2, 6);
        FAIL("64 accepted");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::TooLarge);
    }
    CHECK_THROWS_AS(exhaustive_existence_table(2, 5), Error);
    CHECK_THROWS_AS(exhaustive_existence_table(5, 2), Error);
}

TEST_CASE("existence table at (2,1)") {
    auto rows = exhaustive_existence_table(2, 1);
    REQUIRE(rows.size() == 16);
    unsigned by_table = 0, by_predicate = 0;
    for (const auto &row : rows) {
        by_table += row.solvable;
        by_predicate += log_order(row.k0, row.k1, 2, 1) + std::min(val(row.m, 2, 1), val(row.n, 2, 1)) == 1;
    }
    CHECK(by_table == by_predicate);
    CHECK(rows[0].solvable); // (0, 0, O)
    CHECK_FALSE(rows[1].solvable);
    CHECK(existence_table_csv(rows).rfind("m,n,k0,k1,u,r,solvable\n", 0) == 0);
}

TEST_CASE("existence table at (2,2) against brute force") {
    auto rows = exhaustive_existence_table(2, 2);
    REQUIRE(rows.size() == 256);
    for (const auto &row : rows) {
        const bool brute = brute_force_grep(ModelElement{{row.k0, row.k1}}, row.m, row.n, 2, 2).has_value();
        REQUIRE(row.solvable == brute);
        REQUIRE(row.solvable == (log_order(row.k0, row.k1, 2, 2) + std::min(val(row.m, 2, 2), val(row.n, 2, 2)) == 2));
        REQUIRE(row.u == log_order(row.k0, row.k1, 2, 2));
    }
    CHECK(existence_table_csv(rows) == existence_table_csv(exhaustive_existence_table(2, 2)));
}

TEST_CASE("model torsion group") {
    ModelTorsionGroup g(3, 2);
    CHECK(g.torsion_order() == 9);
    CHECK(g.lpower_order(g.element(3, 0)) == 1);
    CHECK(g.lpower_order(g.element(1, 3)) == 2);
    CHECK(g.is_independent(g.element(1, 0), g.element(0, 1)));
    CHECK_FALSE(g.is_independent(g.element(1, 2), g.element(2, 4)));
    Rng rng(47);
    auto basis = g.find_basis(rng);
    CHECK(g.is_independent(basis.p_gen, basis.q_gen));
    for (int t = 0; t < 50; ++t) {
        auto k = g.random_element(rng);
        auto dl = g.extended_dlog(k, basis);
        REQUIRE(g.add(g.mul(dl.k1, basis.p_gen), g.mul(dl.k2, basis.q_gen)) == k);
    }
    CHECK_THROWS_AS(g.complete_basis(g.element(3, 3), rng), Error);
}
