#include "grex/dlog.hpp"

#include <cstddef>
#include <unordered_map>

#include "grex/error.hpp"

namespace grex {

namespace {

struct Fp2Hash {
    std::size_t operator()(const Fp2Element &a) const {
        std::size_t h0 = mpz_get_ui(a.c0().get_mpz_t());
        std::size_t h1 = mpz_get_ui(a.c1().get_mpz_t());
        return h0 ^ (h1 * 0x9e3779b97f4a7c15ULL);
    }
};

// d in [0, ell) with gamma^d = delta, gamma of order ell.
unsigned digit_bsgs(const Fp2Element &delta, const Fp2Element &gamma, unsigned ell) {
    unsigned m = 1;
    while (static_cast<unsigned long>(m) * m < ell)
        ++m;
    std::unordered_map<Fp2Element, unsigned, Fp2Hash> baby;
    baby.reserve(m);
    Fp2Element cur = Fp2Element::one(gamma.field());
    for (unsigned j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur *= gamma;
    }
    const Fp2Element giant = gamma.pow(-mpz_class(m));
    cur = delta;
    for (unsigned i = 0; i < m; ++i) {
        if (auto it = baby.find(cur); it != baby.end()) {
            unsigned long d = static_cast<unsigned long>(i) * m + it->second;
            if (d < ell)
                return static_cast<unsigned>(d);
        }
        cur *= giant;
    }
    fail(ErrorKind::NotInSubgroup, "digit equation has no solution");
}

// x mod ell^k with g^x = h, g of order ell^k. Splitting x = x0 + ell^k1 * x1
// gives two independent subproblems of half the size.
mpz_class solve_range(const Fp2Element &h, const Fp2Element &g, unsigned ell, unsigned k) {
    if (k == 1)
        return digit_bsgs(h, g, ell);
    const unsigned k1 = k / 2;
    const unsigned k2 = k - k1;
    const mpz_class lo_shift = ipow(ell, k1);
    const mpz_class hi_shift = ipow(ell, k2);

    const mpz_class x0 = solve_range(h.pow(hi_shift), g.pow(hi_shift), ell, k1);
    const mpz_class x1 = solve_range(h * g.pow(-x0), g.pow(lo_shift), ell, k2);
    return x0 + lo_shift * x1;
}

} // namespace

mpz_class dlog_prime_power(const Fp2Element &h, const Fp2Element &g, unsigned ell, unsigned e) {
    if (e == 0)
        return 0;
    const mpz_class n = ipow(ell, e);
    if (g.pow(ipow(ell, e - 1)).is_one() || !g.pow(n).is_one())
        fail(ErrorKind::BadParams, "base does not have order ell^e");
    mpz_class x = solve_range(h, g, ell, e);
    x = mod(x, n);
    if (g.pow(x) != h)
        fail(ErrorKind::NotInSubgroup, "element is not a power of the base");
    return x;
}

ExtendedDlog extended_dlog(const Point &k, const TorsionBasis &basis, const TorsionContext &ctx) {
    const unsigned ell = ctx.ell();
    const unsigned e = ctx.e();
    // e(P', K) = g^k2 and e(K, Q') = g^k1 for g = e(P', Q').
    mpz_class k2 = dlog_prime_power(weil_pairing(basis.p_gen, k, ctx), basis.pairing, ell, e);
    mpz_class k1 = dlog_prime_power(weil_pairing(k, basis.q_gen, ctx), basis.pairing, ell, e);

    const Curve &curve = ctx.curve();
    Point rebuilt = curve.add_unchecked(curve.scalar_mul_unchecked(k1, basis.p_gen),
                                        curve.scalar_mul_unchecked(k2, basis.q_gen));
    if (rebuilt != k)
        fail(ErrorKind::VerificationFailed, "extended dlog does not reconstruct the point");
    return {std::move(k1), std::move(k2)};
}

} // namespace grex
