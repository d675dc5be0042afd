#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace grex {

/// Caller-supplied randomness for every randomized search in the library.
using Rng = std::mt19937_64;

inline constexpr int kMillerRabinRounds = 64;

bool is_probable_prime(const mpz_class &n);

/// Least non-negative residue of a mod n (n > 0).
mpz_class mod(const mpz_class &a, const mpz_class &n);

/// Inverse of a modulo n; throws DivisionByZero when gcd(a, n) != 1.
mpz_class inverse_mod(const mpz_class &a, const mpz_class &n);

/// Largest r <= cap with ell^r | a. Zero has valuation cap.
unsigned valuation(const mpz_class &a, unsigned ell, unsigned cap);

mpz_class ipow(unsigned long base, unsigned long exp);

/// Uniform integer in [0, n).
mpz_class random_below(const mpz_class &n, Rng &rng);

std::string to_decimal(const mpz_class &v);

/// Parses an optionally signed decimal integer; throws Malformed otherwise.
mpz_class parse_decimal(std::string_view text);

} // namespace grex
