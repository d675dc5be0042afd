#pragma once

#include "grex/torsion.hpp"

namespace grex {

struct ParamRequest {
    unsigned ell = 2;
    unsigned e = 1;
    mpz_class f_max = 10000;
};

/// Smallest f in [1, f_max] with gcd(f, ell) = 1 and p = ell^e * f - 1 a
/// prime congruent to 3 mod 4, on the curve y^2 = x^3 + x. Throws NotFound.
TorsionContext gen_params(const ParamRequest &req);

} // namespace grex
