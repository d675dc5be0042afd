#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grex/group.hpp"
#include "grex/torsion.hpp"

namespace grex {

struct ModelElement {
    std::vector<std::int64_t> coords;

    bool operator==(const ModelElement &o) const { return coords == o.coords; }
    bool operator!=(const ModelElement &o) const { return coords != o.coords; }
};

/// prod_i Z/n_i with the standard basis vectors as generators, so the
/// extended discrete logarithm of an element is its coordinate vector.
class ModelGroup {
public:
    explicit ModelGroup(std::vector<std::int64_t> orders);

    std::size_t rank() const { return orders_.size(); }
    const std::vector<std::int64_t> &orders() const { return orders_; }
    mpz_class cardinality() const;

    ModelElement identity() const;
    /// Reduces each coordinate into [0, n_i).
    ModelElement element(std::vector<std::int64_t> coords) const;
    ModelElement generator(std::size_t i) const;

    ModelElement add(const ModelElement &a, const ModelElement &b) const;
    ModelElement sub(const ModelElement &a, const ModelElement &b) const;
    ModelElement neg(const ModelElement &a) const;
    ModelElement mul(const mpz_class &k, const ModelElement &a) const;
    ModelElement mul(std::int64_t k, const ModelElement &a) const;
    /// lcm over i of n_i / gcd(n_i, c_i).
    mpz_class order(const ModelElement &a) const;

    void check(const ModelElement &a) const;

private:
    std::vector<std::int64_t> orders_;
};

/// An ell^r-th root of h by the exponent-vector construction
/// x = c*h - s*d * sum_i (k_i / ell^r) g_i, with |G| = ell^t * s,
/// d = -s^{-1} mod ell^r and c = (s*d + 1) / ell^r. r = 0 returns h.
/// Throws NotAPower or BadParams.
ModelElement generic_root(const ModelElement &h, unsigned ell, unsigned r, const ModelGroup &group);

struct ModelBasis {
    ModelElement p_gen;
    ModelElement q_gen;
};

/// (Z/ell^e)^2 as a solver backend. Independence is the determinant test
/// det(P|Q) != 0 mod ell.
class ModelTorsionGroup {
public:
    using Element = ModelElement;
    using Basis = ModelBasis;

    ModelTorsionGroup(unsigned ell, unsigned e, RetryLimits limits = {});

    unsigned ell() const { return ell_; }
    unsigned e() const { return e_; }
    const mpz_class &torsion_order() const { return order_; }
    const ModelGroup &group() const { return group_; }

    Element identity() const { return group_.identity(); }
    Element element(std::int64_t a, std::int64_t b) const { return group_.element({a, b}); }
    Element add(const Element &a, const Element &b) const { return group_.add(a, b); }
    Element neg(const Element &a) const { return group_.neg(a); }
    Element mul(const mpz_class &k, const Element &a) const { return group_.mul(k, a); }

    bool is_member(const Element &a) const;
    void require_member(const Element &a) const;
    unsigned lpower_order(const Element &a) const;
    Basis find_basis(Rng &rng) const;
    Element complete_basis(const Element &k, Rng &rng) const;
    ExtendedDlog extended_dlog(const Element &k, const Basis &basis) const;
    bool is_independent(const Element &a, const Element &b) const;

    Element random_element(Rng &rng) const;

private:
    Element sample_full_order(Rng &rng) const;

    unsigned ell_;
    unsigned e_;
    std::int64_t n_;
    mpz_class order_;
    ModelGroup group_;
    RetryLimits limits_;
};

inline constexpr std::int64_t kBruteForceMaxOrder = 32;
inline constexpr std::int64_t kExistenceTableMaxOrder = 16;

/// First generating pair (P, Q) of (Z/ell^e)^2, in lexicographic scan order,
/// with m*P + n*Q = K. Throws TooLarge when ell^e > 32.
std::optional<std::pair<ModelElement, ModelElement>> brute_force_grep(const ModelElement &k, std::int64_t m,
                                                                      std::int64_t n, unsigned ell, unsigned e);

/// Flags indexed by ((m * N + n) * N + k0) * N + k1, N = ell^e, marking the
/// (m, n, K) for which some generating pair solves m*P + n*Q = K. Computed by
/// pushing every generating pair through every (m, n).
std::vector<std::uint8_t> enumerate_solvable(unsigned ell, unsigned e, std::int64_t max_order = kExistenceTableMaxOrder);

struct ExistenceRow {
    std::int64_t m;
    std::int64_t n;
    std::int64_t k0;
    std::int64_t k1;
    unsigned u;
    unsigned r;
    bool solvable;
};

/// Every (m, n, K) over (Z/ell^e)^2 in lexicographic order. Throws TooLarge
/// when ell^e > 16.
std::vector<ExistenceRow> exhaustive_existence_table(unsigned ell, unsigned e);

std::string existence_table_csv(const std::vector<ExistenceRow> &rows);

} // namespace grex
