#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>

#include "grex/bigint.hpp"

namespace grex {

/// Per-thread tallies of the arithmetic the solvers perform. Used by the
/// scaling smoke test; reset freely.
struct OpCounts {
    std::uint64_t fp2_mul = 0;
    std::uint64_t fp2_inv = 0;
    std::uint64_t point_add = 0;
    std::uint64_t point_dbl = 0;

    std::uint64_t curve_ops() const { return point_add + point_dbl; }
};

OpCounts &op_counts();
void reset_op_counts();

/// F_p for a prime p = 3 (mod 4). Shared by reference between all elements
/// built over it.
class PrimeField {
public:
    /// Throws NotPrime or BadParams.
    explicit PrimeField(mpz_class p);

    static std::shared_ptr<const PrimeField> create(mpz_class p);

    const mpz_class &modulus() const { return p_; }
    const mpz_class &sqrt_exponent() const { return sqrt_exp_; }

private:
    mpz_class p_;
    mpz_class sqrt_exp_; // (p + 1) / 4
};

using FieldRef = std::shared_ptr<const PrimeField>;

void check_same_field(const FieldRef &a, const FieldRef &b);

class FpElement {
public:
    FpElement() = default;
    FpElement(FieldRef field, const mpz_class &value);

    const mpz_class &value() const { return v_; }
    const FieldRef &field() const { return field_; }
    bool is_zero() const { return v_ == 0; }

    FpElement operator+(const FpElement &o) const;
    FpElement operator-(const FpElement &o) const;
    FpElement operator*(const FpElement &o) const;
    FpElement operator-() const;
    bool operator==(const FpElement &o) const;

    FpElement inv() const;
    FpElement pow(const mpz_class &k) const;
    bool is_square() const;
    std::optional<FpElement> sqrt() const;

private:
    FieldRef field_;
    mpz_class v_;
};

/// c0 + c1*i in F_p[i]/(i^2 + 1). Coordinates are kept fully reduced.
class Fp2Element {
public:
    /// Detached zero with no field; only meaningful as a placeholder.
    Fp2Element() = default;
    Fp2Element(FieldRef field, const mpz_class &c0, const mpz_class &c1 = 0);

    static Fp2Element zero(const FieldRef &field) { return {field, 0, 0}; }
    static Fp2Element one(const FieldRef &field) { return {field, 1, 0}; }
    static Fp2Element random(const FieldRef &field, Rng &rng);

    const mpz_class &c0() const { return c0_; }
    const mpz_class &c1() const { return c1_; }
    FpElement real() const { return {field_, c0_}; }
    FpElement imag() const { return {field_, c1_}; }
    const FieldRef &field() const { return field_; }

    bool is_zero() const { return c0_ == 0 && c1_ == 0; }
    bool is_one() const { return c0_ == 1 && c1_ == 0; }

    Fp2Element operator+(const Fp2Element &o) const;
    Fp2Element operator-(const Fp2Element &o) const;
    Fp2Element operator*(const Fp2Element &o) const;
    Fp2Element operator/(const Fp2Element &o) const { return *this * o.inv(); }
    Fp2Element operator-() const;
    Fp2Element &operator+=(const Fp2Element &o) { return *this = *this + o; }
    Fp2Element &operator-=(const Fp2Element &o) { return *this = *this - o; }
    Fp2Element &operator*=(const Fp2Element &o) { return *this = *this * o; }
    bool operator==(const Fp2Element &o) const;
    bool operator!=(const Fp2Element &o) const { return !(*this == o); }

    Fp2Element scale(const mpz_class &k) const;
    Fp2Element conj() const;
    /// c0^2 + c1^2, the norm down to F_p.
    FpElement norm() const;
    /// Throws DivisionByZero on zero.
    Fp2Element inv() const;
    /// Square-and-multiply; negative k goes through inv().
    Fp2Element pow(const mpz_class &k) const;

    bool is_square() const;
    /// The root whose (c0, c1) is lexicographically smaller, or nullopt
    /// for a non-residue.
    std::optional<Fp2Element> sqrt() const;

private:
    FieldRef field_;
    mpz_class c0_;
    mpz_class c1_;
};

std::ostream &operator<<(std::ostream &os, const Fp2Element &a);

} // namespace grex
