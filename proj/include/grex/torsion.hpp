#pragma once

#include "grex/curve.hpp"

namespace grex {

/// Bounds on the randomized searches. Hitting one means the context is
/// mis-specified, not that the search was unlucky.
struct RetryLimits {
    unsigned basis_attempts = 256;
    unsigned pairing_attempts = 32;
};

/// One instance of E[ell^e] on a curve with #E = (ell^e * f)^2, p + 1 = ell^e * f.
class TorsionContext {
public:
    /// Throws BadParams when the curve/cofactor bookkeeping is inconsistent.
    TorsionContext(Curve curve, unsigned ell, unsigned e, mpz_class cofactor, RetryLimits limits = {});

    /// y^2 = x^3 + x over F_{p^2} with p = ell^e * f - 1.
    static TorsionContext supersingular(const mpz_class &p, unsigned ell, unsigned e, const mpz_class &cofactor,
                                        RetryLimits limits = {});

    const Curve &curve() const { return curve_; }
    const FieldRef &field() const { return curve_.field(); }
    unsigned ell() const { return ell_; }
    unsigned e() const { return e_; }
    const mpz_class &cofactor() const { return cofactor_; }
    /// ell^e
    const mpz_class &torsion_order() const { return torsion_order_; }
    const RetryLimits &limits() const { return limits_; }

    bool in_torsion(const Point &pt) const;
    void require_torsion(const Point &pt) const;

private:
    Curve curve_;
    unsigned ell_;
    unsigned e_;
    mpz_class cofactor_;
    mpz_class torsion_order_;
    RetryLimits limits_;
};

struct TorsionBasis {
    Point p_gen;
    Point q_gen;
    Fp2Element pairing; // weil_pairing(p_gen, q_gen)
};

struct BasisSearchStats {
    unsigned point_samples = 0;
    unsigned pairing_tests = 0;
};

/// The order-ell^e Weil pairing, by Miller's algorithm with a shifted divisor.
/// Throws NotInTorsion if either input is outside E[ell^e].
Fp2Element weil_pairing(const Point &p, const Point &q, const TorsionContext &ctx);

/// f * R, which lies in E[ell^e].
Point cofactor_project(const Point &r, const TorsionContext &ctx);

/// weil_pairing(P, Q)^(ell^(e-1)) != 1.
bool is_independent(const Point &p, const Point &q, const TorsionContext &ctx);

TorsionBasis find_basis(const TorsionContext &ctx, Rng &rng, BasisSearchStats *stats = nullptr);

/// A point K' of order ell^e with <K, K'> = E[ell^e]. Throws OrderError if
/// ord(K) != ell^e.
Point complete_basis(const Point &k, const TorsionContext &ctx, Rng &rng, BasisSearchStats *stats = nullptr);

} // namespace grex
