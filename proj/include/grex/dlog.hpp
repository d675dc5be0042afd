#pragma once

#include "grex/group.hpp"
#include "grex/torsion.hpp"

namespace grex {

/// x in [0, ell^e) with g^x = h, where g has multiplicative order exactly
/// ell^e. The base-ell digits are recovered by recursive halving of the
/// exponent range; each single digit is a baby-step giant-step search in the
/// order-ell subgroup. Throws BadParams if g has the wrong order and
/// NotInSubgroup if h is not a power of g.
mpz_class dlog_prime_power(const Fp2Element &h, const Fp2Element &g, unsigned ell, unsigned e);

/// (k1, k2) with K = k1*P' + k2*Q', obtained from two pairing values and
/// checked by reconstruction before returning.
ExtendedDlog extended_dlog(const Point &k, const TorsionBasis &basis, const TorsionContext &ctx);

} // namespace grex
