#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "grex/error.hpp"
#include "grex/group.hpp"

namespace grex {

template <class E>
struct GrepInstance {
    E k;
    mpz_class m;
    mpz_class n;
};

template <class E>
struct GrepSolution {
    E p;
    E q;
    int algorithm_case = 0; // 1 or 2
    unsigned u = 0;
    unsigned r = 0;
};

struct Existence {
    bool solvable;
    unsigned u; // ord(K) = ell^u
    unsigned r; // ell-adic valuation of gcd(m, n), e when m = n = 0
};

template <class E>
struct SimulInstance {
    E k1;
    E k2;
    mpz_class m1;
    mpz_class n1;
    mpz_class m2;
    mpz_class n2;
};

enum class SimulBranch { Unique, Coset };

template <class E>
struct SimulSolution {
    E p;
    E q;
    SimulBranch branch;
    unsigned r = 0;                    // valuation of the determinant
    std::uint64_t coset_candidates = 0; // roots tried in the coset branch
};

struct SimulOptions {
    std::uint64_t max_coset_size = std::uint64_t{1} << 20;
};

struct GrepChecks {
    bool membership = false;
    bool equation = false;
    bool independence = false;

    bool all() const { return membership && equation && independence; }
};

namespace detail {

template <RankTwoGroup G>
typename G::Element combine(const G &g, const mpz_class &a, const typename G::Element &x, const mpz_class &b,
                            const typename G::Element &y) {
    return g.add(g.mul(a, x), g.mul(b, y));
}

inline bool divisible(const mpz_class &a, unsigned ell) { return mpz_divisible_ui_p(a.get_mpz_t(), ell) != 0; }

} // namespace detail

/// Membership, m*P + n*Q = K, and <P, Q> = whole group.
template <RankTwoGroup G>
GrepChecks verify_grep(const GrepInstance<typename G::Element> &inst, const typename G::Element &p,
                       const typename G::Element &q, const G &g) {
    GrepChecks checks;
    checks.membership = g.is_member(inst.k) && g.is_member(p) && g.is_member(q);
    if (!checks.membership)
        return checks;
    checks.equation = detail::combine(g, inst.m, p, inst.n, q) == inst.k;
    // A pairing of exact order ell^e forces both points to have order ell^e.
    checks.independence = g.is_independent(p, q);
    return checks;
}

template <RankTwoGroup G>
Existence existence_check(const GrepInstance<typename G::Element> &inst, const G &g) {
    g.require_member(inst.k);
    const unsigned e = g.e();
    const unsigned u = g.lpower_order(inst.k);
    const mpz_class m = mod(inst.m, g.torsion_order());
    const mpz_class n = mod(inst.n, g.torsion_order());
    const unsigned r = std::min(valuation(m, g.ell(), e), valuation(n, g.ell(), e));
    return {u + r == e, u, r};
}

/// ell does not divide both m and n, and ord(K) = ell^e.
template <RankTwoGroup G>
GrepSolution<typename G::Element> solve_case1(const GrepInstance<typename G::Element> &inst, const G &g, Rng &rng) {
    using Element = typename G::Element;
    const mpz_class &order = g.torsion_order();
    const unsigned ell = g.ell();
    mpz_class m = mod(inst.m, order);
    mpz_class n = mod(inst.n, order);
    if (detail::divisible(m, ell) && detail::divisible(n, ell))
        fail(ErrorKind::PreconditionViolated, "case 1 needs ell to not divide gcd(m, n)");
    g.require_member(inst.k);
    if (g.lpower_order(inst.k) != g.e())
        fail(ErrorKind::PreconditionViolated, "case 1 needs ord(K) = ell^e");

    const bool swapped = detail::divisible(n, ell);
    if (swapped)
        std::swap(m, n);

    Element k_prime = g.complete_basis(inst.k, rng);
    Element p = k_prime;
    Element q = g.mul(inverse_mod(n, order), g.add(inst.k, g.neg(g.mul(m, k_prime))));
    if (swapped)
        std::swap(p, q);

    GrepSolution<Element> sol{std::move(p), std::move(q), 1, g.e(), 0};
    if (!verify_grep(inst, sol.p, sol.q, g).all())
        fail(ErrorKind::VerificationFailed, "case 1 produced an invalid solution");
    return sol;
}

/// R with ell^r * R = K, read off the extended discrete logarithm of K in
/// the given basis: R = (k1 / ell^r) P' + (k2 / ell^r) Q'. This is the
/// N = 2, s = 1, c = 1, d = ell^r - 1 case of the exponent-vector root
/// formula. Throws NotAPower when ell^r does not divide both k1 and k2.
template <RankTwoGroup G>
typename G::Element lr_root(const typename G::Element &k, unsigned r, const typename G::Basis &basis, const G &g) {
    if (r > g.e())
        fail(ErrorKind::BadParams, "root degree exceeds the group exponent");
    g.require_member(k);
    if (r == 0)
        return k;
    const ExtendedDlog dl = g.extended_dlog(k, basis);
    const mpz_class lr = ipow(g.ell(), r);
    if (!mpz_divisible_p(dl.k1.get_mpz_t(), lr.get_mpz_t()) || !mpz_divisible_p(dl.k2.get_mpz_t(), lr.get_mpz_t()))
        fail(ErrorKind::NotAPower, "point is not an ell^r-th multiple");
    typename G::Element root = detail::combine(g, dl.k1 / lr, basis.p_gen, dl.k2 / lr, basis.q_gen);
    if (!(g.mul(lr, root) == k))
        fail(ErrorKind::VerificationFailed, "ell^r-th root does not round-trip");
    return root;
}

/// ell divides both m and n.
template <RankTwoGroup G>
GrepSolution<typename G::Element> solve_case2(const GrepInstance<typename G::Element> &inst, const G &g, Rng &rng) {
    using Element = typename G::Element;
    const mpz_class &order = g.torsion_order();
    const unsigned ell = g.ell();
    const mpz_class m = mod(inst.m, order);
    const mpz_class n = mod(inst.n, order);
    if (!detail::divisible(m, ell) || !detail::divisible(n, ell))
        fail(ErrorKind::PreconditionViolated, "case 2 needs ell | m and ell | n");

    const Existence ex = existence_check(inst, g);
    if (!ex.solvable)
        fail(ErrorKind::NoSolution, "no solution: u + r = " + std::to_string(ex.u + ex.r) + " != e");

    GrepSolution<Element> sol;
    if (ex.r == g.e()) {
        // m = n = 0 and K = O: every basis works.
        auto basis = g.find_basis(rng);
        sol = {basis.p_gen, basis.q_gen, 2, ex.u, ex.r};
    } else {
        const mpz_class lr = ipow(ell, ex.r);
        const mpz_class m1 = m / lr;
        const mpz_class n1 = n / lr;
        auto basis = g.find_basis(rng);
        Element root = lr_root(inst.k, ex.r, basis, g);
        GrepSolution<Element> inner = solve_case1(GrepInstance<Element>{root, m1, n1}, g, rng);
        sol = {std::move(inner.p), std::move(inner.q), 2, ex.u, ex.r};
    }
    if (!verify_grep(inst, sol.p, sol.q, g).all())
        fail(ErrorKind::VerificationFailed, "case 2 produced an invalid solution");
    return sol;
}

/// Finds generators P, Q with m*P + n*Q = K, or throws NoSolution.
template <RankTwoGroup G>
GrepSolution<typename G::Element> solve_grep(const GrepInstance<typename G::Element> &inst, const G &g, Rng &rng) {
    const Existence ex = existence_check(inst, g);
    if (!ex.solvable)
        fail(ErrorKind::NoSolution, "no solution: u = " + std::to_string(ex.u) + ", r = " + std::to_string(ex.r));
    auto sol = ex.r == 0 ? solve_case1(inst, g, rng) : solve_case2(inst, g, rng);
    sol.u = ex.u;
    sol.r = ex.r;
    if (!verify_grep(inst, sol.p, sol.q, g).all())
        fail(ErrorKind::VerificationFailed, "solver produced an invalid solution");
    return sol;
}

/// Solves K1 = m1*P + n1*Q, K2 = m2*P + n2*Q for a generating pair.
///
/// When det = m1*n2 - m2*n1 is a unit the pair is (K1, K2) M^{-1}. Otherwise
/// det = ell^r * s, P is an ell^r-th root of s^{-1}(n2*K1 - n1*K2) and
/// Q = n2^{-1}(K2 - m2*P); the roots form a coset of E[ell^r], which is
/// searched until a generating pair turns up.
template <RankTwoGroup G>
SimulSolution<typename G::Element> solve_simultaneous(const SimulInstance<typename G::Element> &inst, const G &g,
                                                      Rng &rng, const SimulOptions &options = {}) {
    using Element = typename G::Element;
    const mpz_class &order = g.torsion_order();
    const unsigned ell = g.ell();
    const unsigned e = g.e();
    g.require_member(inst.k1);
    g.require_member(inst.k2);

    Element k1 = inst.k1;
    Element k2 = inst.k2;
    mpz_class m1 = mod(inst.m1, order), n1 = mod(inst.n1, order);
    mpz_class m2 = mod(inst.m2, order), n2 = mod(inst.n2, order);
    if (mod(m1 * n2 - m2 * n1, order) == 0)
        fail(ErrorKind::DegenerateSystem, "determinant vanishes modulo ell^e");

    // Arrange for ell not to divide n2: swap the equations, swap the roles of
    // P and Q, or both.
    bool swap_vars = false;
    if (detail::divisible(n2, ell)) {
        if (!detail::divisible(n1, ell)) {
            std::swap(k1, k2);
            std::swap(m1, m2);
            std::swap(n1, n2);
        } else if (!detail::divisible(m2, ell)) {
            swap_vars = true;
            std::swap(m1, n1);
            std::swap(m2, n2);
        } else if (!detail::divisible(m1, ell)) {
            swap_vars = true;
            std::swap(k1, k2);
            std::swap(m1, n2);
            std::swap(m2, n1);
        } else {
            fail(ErrorKind::DegenerateSystem, "every coefficient is divisible by ell");
        }
    }

    const mpz_class det = mod(m1 * n2 - m2 * n1, order);
    const mpz_class n2_inv = inverse_mod(n2, order);
    auto satisfies = [&](const Element &p, const Element &q) {
        return detail::combine(g, m1, p, n1, q) == k1 && detail::combine(g, m2, p, n2, q) == k2;
    };
    auto finish = [&](Element p, Element q, SimulBranch branch, unsigned r, std::uint64_t tried) {
        if (swap_vars)
            std::swap(p, q);
        return SimulSolution<Element>{std::move(p), std::move(q), branch, r, tried};
    };

    if (!detail::divisible(det, ell)) {
        const mpz_class det_inv = inverse_mod(det, order);
        Element p = g.mul(det_inv, detail::combine(g, n2, k1, order - n1, k2));
        Element q = g.mul(det_inv, detail::combine(g, order - m2, k1, m1, k2));
        if (!satisfies(p, q))
            fail(ErrorKind::VerificationFailed, "matrix inverse does not solve the system");
        if (!g.is_independent(p, q))
            fail(ErrorKind::NoGeneratingSolution, "the unique solution does not generate the group");
        return finish(std::move(p), std::move(q), SimulBranch::Unique, 0, 1);
    }

    const unsigned r = valuation(det, ell, e);
    const mpz_class lr = ipow(ell, r);
    const mpz_class s = det / lr;
    Element h = g.mul(inverse_mod(s, order), detail::combine(g, n2, k1, order - n1, k2));
    auto basis = g.find_basis(rng);
    const Element root = lr_root(h, r, basis, g);

    const mpz_class span = ipow(ell, r);
    if (span * span > options.max_coset_size)
        fail(ErrorKind::RetryLimitExceeded, "root coset is larger than the configured search bound");
    // E[ell^r] is spanned by ell^(e-r) P' and ell^(e-r) Q'.
    const mpz_class shift = ipow(ell, e - r);
    const Element t1 = g.mul(shift, basis.p_gen);
    const Element t2 = g.mul(shift, basis.q_gen);
    std::uint64_t tried = 0;
    Element row = root;
    for (mpz_class a = 0; a < span; ++a) {
        Element p = row;
        for (mpz_class b = 0; b < span; ++b) {
            ++tried;
            Element q = g.mul(n2_inv, g.add(k2, g.neg(g.mul(m2, p))));
            if (!satisfies(p, q))
                fail(ErrorKind::VerificationFailed, "coset candidate does not solve the system");
            if (g.is_independent(p, q))
                return finish(std::move(p), std::move(q), SimulBranch::Coset, r, tried);
            p = g.add(p, t2);
        }
        row = g.add(row, t1);
    }
    fail(ErrorKind::NoGeneratingSolution, "no generating pair in the root coset");
}

template <RankTwoGroup G>
GrepChecks verify_simultaneous(const SimulInstance<typename G::Element> &inst, const typename G::Element &p,
                               const typename G::Element &q, const G &g) {
    GrepChecks checks;
    checks.membership = g.is_member(inst.k1) && g.is_member(inst.k2) && g.is_member(p) && g.is_member(q);
    if (!checks.membership)
        return checks;
    checks.equation = detail::combine(g, inst.m1, p, inst.n1, q) == inst.k1 &&
                      detail::combine(g, inst.m2, p, inst.n2, q) == inst.k2;
    checks.independence = g.is_independent(p, q);
    return checks;
}

} // namespace grex
