#include "grex/bigint.hpp"

#include "grex/error.hpp"

namespace grex {

bool is_probable_prime(const mpz_class &n) {
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), kMillerRabinRounds) > 0;
}

mpz_class mod(const mpz_class &a, const mpz_class &n) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class inverse_mod(const mpz_class &a, const mpz_class &n) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
        fail(ErrorKind::DivisionByZero, to_decimal(a) + " is not invertible modulo " + to_decimal(n));
    return r;
}

unsigned valuation(const mpz_class &a, unsigned ell, unsigned cap) {
    if (a == 0)
        return cap;
    mpz_class t = a;
    unsigned r = 0;
    while (r < cap && mpz_divisible_ui_p(t.get_mpz_t(), ell)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), ell);
        ++r;
    }
    return r;
}

mpz_class ipow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

mpz_class random_below(const mpz_class &n, Rng &rng) {
    // 64 surplus bits make the reduction bias negligible.
    const size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
    mpz_class acc = 0;
    for (size_t i = 0; i < words; ++i) {
        acc <<= 64;
        mpz_class w;
        std::uint64_t x = rng();
        mpz_import(w.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
        acc += w;
    }
    return mod(acc, n);
}

std::string to_decimal(const mpz_class &v) { return v.get_str(10); }

mpz_class parse_decimal(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (digits.empty())
        fail(ErrorKind::Malformed, "empty integer");
    for (char c : digits)
        if (c < '0' || c > '9')
            fail(ErrorKind::Malformed, "not a decimal integer: '" + std::string(text) + "'");
    return mpz_class(std::string(text), 10);
}

} // namespace grex
