#pragma once

#include <concepts>

#include "grex/bigint.hpp"

namespace grex {

/// Exponent vector (k1, k2) of an element in a fixed basis, both in [0, ell^e).
struct ExtendedDlog {
    mpz_class k1;
    mpz_class k2;

    bool operator==(const ExtendedDlog &o) const { return k1 == o.k1 && k2 == o.k2; }
};

/// A group isomorphic to (Z/ell^e)^2 as seen by the root-extraction solvers.
/// Curve torsion and the abstract model group both satisfy it.
template <class G>
concept RankTwoGroup = requires(const G &g, const typename G::Element &a, const typename G::Basis &basis,
                                const mpz_class &k, Rng &rng) {
    typename G::Element;
    typename G::Basis;
    { g.ell() } -> std::convertible_to<unsigned>;
    { g.e() } -> std::convertible_to<unsigned>;
    { g.torsion_order() } -> std::convertible_to<const mpz_class &>;
    { g.identity() } -> std::same_as<typename G::Element>;
    { g.add(a, a) } -> std::same_as<typename G::Element>;
    { g.neg(a) } -> std::same_as<typename G::Element>;
    { g.mul(k, a) } -> std::same_as<typename G::Element>;
    { a == a } -> std::convertible_to<bool>;
    { g.is_member(a) } -> std::convertible_to<bool>;
    { g.require_member(a) };
    { g.lpower_order(a) } -> std::convertible_to<unsigned>;
    { g.find_basis(rng) } -> std::same_as<typename G::Basis>;
    { g.complete_basis(a, rng) } -> std::same_as<typename G::Element>;
    { g.extended_dlog(a, basis) } -> std::same_as<ExtendedDlog>;
    { g.is_independent(a, a) } -> std::convertible_to<bool>;
    { basis.p_gen } -> std::convertible_to<const typename G::Element &>;
    { basis.q_gen } -> std::convertible_to<const typename G::Element &>;
};

} // namespace grex
