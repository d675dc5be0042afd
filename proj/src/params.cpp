#include "grex/params.hpp"

#include "grex/error.hpp"

namespace grex {

TorsionContext gen_params(const ParamRequest &req) {
    if (req.ell < 2 || !is_probable_prime(req.ell))
        fail(ErrorKind::BadParams, "ell = " + std::to_string(req.ell) + " is not prime");
    if (req.e < 1)
        fail(ErrorKind::BadParams, "e must be positive");
    const mpz_class le = ipow(req.ell, req.e);
    for (mpz_class f = 1; f <= req.f_max; ++f) {
        if (mpz_divisible_ui_p(f.get_mpz_t(), req.ell))
            continue;
        const mpz_class p = le * f - 1;
        if (mod(p, 4) != 3 || !is_probable_prime(p))
            continue;
        return TorsionContext::supersingular(p, req.ell, req.e, f);
    }
    fail(ErrorKind::NotFound, "no prime ell^e*f - 1 with f <= " + to_decimal(req.f_max));
}

} // namespace grex
