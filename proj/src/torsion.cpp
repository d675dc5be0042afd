#include "grex/torsion.hpp"

#include <optional>
#include <utility>

#include "grex/error.hpp"

namespace grex {

TorsionContext::TorsionContext(Curve curve, unsigned ell, unsigned e, mpz_class cofactor, RetryLimits limits)
    : curve_(std::move(curve)), ell_(ell), e_(e), cofactor_(std::move(cofactor)), limits_(limits) {
    if (ell_ < 2 || !is_probable_prime(ell_))
        fail(ErrorKind::BadParams, "ell = " + std::to_string(ell_) + " is not prime");
    if (e_ < 1)
        fail(ErrorKind::BadParams, "e must be positive");
    if (cofactor_ < 1)
        fail(ErrorKind::BadParams, "cofactor must be positive");
    if (mpz_divisible_ui_p(cofactor_.get_mpz_t(), ell_))
        fail(ErrorKind::BadParams, "cofactor is divisible by ell");
    torsion_order_ = ipow(ell_, e_);
    const mpz_class n0 = torsion_order_ * cofactor_;
    if (curve_.order_root() != n0)
        fail(ErrorKind::BadParams, "curve order root differs from ell^e * f");
    if (curve_.field()->modulus() + 1 != n0)
        fail(ErrorKind::UnsupportedForm, "p + 1 != ell^e * f; only the p = ell^e*f - 1 family is supported");
}

TorsionContext TorsionContext::supersingular(const mpz_class &p, unsigned ell, unsigned e, const mpz_class &cofactor,
                                             RetryLimits limits) {
    return {Curve::supersingular(PrimeField::create(p)), ell, e, cofactor, limits};
}

bool TorsionContext::in_torsion(const Point &pt) const {
    return curve_.is_on_curve(pt) && curve_.scalar_mul_unchecked(torsion_order_, pt).is_identity();
}

void TorsionContext::require_torsion(const Point &pt) const {
    if (!curve_.is_on_curve(pt))
        fail(ErrorKind::OffCurve, "point is not on the curve");
    if (!curve_.scalar_mul_unchecked(torsion_order_, pt).is_identity())
        fail(ErrorKind::NotInTorsion, "point is not in E[ell^e]");
}

namespace {

// Numerator and denominator of a Miller function evaluated at one point.
struct Fraction {
    Fp2Element num;
    Fp2Element den;
};

// l_{A,B}(X) / v_{A+B}(X), whose divisor is [A] + [B] - [A+B] - [O].
// Returns false when X hits a zero or pole.
bool line_step(const Curve &curve, const Point &a, const Point &b, const Point &x, Fraction &acc) {
    if (a.is_identity() || b.is_identity())
        return true;
    const FieldRef &field = curve.field();
    Fp2Element num;
    Fp2Element den = Fp2Element::one(field);
    if (a.x() == b.x() && (a.y() != b.y() || a.y().is_zero())) {
        num = x.x() - a.x();
    } else {
        Fp2Element lambda = a == b ? ((a.x() * a.x()).scale(3) + curve.a()) / a.y().scale(2)
                                   : (b.y() - a.y()) / (b.x() - a.x());
        Fp2Element x3 = lambda * lambda - a.x() - b.x();
        num = x.y() - a.y() - lambda * (x.x() - a.x());
        den = x.x() - x3;
    }
    if (num.is_zero() || den.is_zero())
        return false;
    acc.num *= num;
    acc.den *= den;
    return true;
}

// f(X1) / f(X2) for the Miller function f with divisor n[P] - n[O].
std::optional<Fp2Element> miller_ratio(const Curve &curve, const Point &p, const mpz_class &n, const Point &x1,
                                       const Point &x2) {
    if (x1.is_identity() || x2.is_identity())
        return std::nullopt;
    const FieldRef &field = curve.field();
    Fraction f1{Fp2Element::one(field), Fp2Element::one(field)};
    Fraction f2 = f1;
    Point t = p;
    const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (size_t i = bits - 1; i-- > 0;) {
        f1.num *= f1.num;
        f1.den *= f1.den;
        f2.num *= f2.num;
        f2.den *= f2.den;
        if (!line_step(curve, t, t, x1, f1) || !line_step(curve, t, t, x2, f2))
            return std::nullopt;
        t = curve.dbl_unchecked(t);
        if (mpz_tstbit(n.get_mpz_t(), i)) {
            if (!line_step(curve, t, p, x1, f1) || !line_step(curve, t, p, x2, f2))
                return std::nullopt;
            t = curve.add_unchecked(t, p);
        }
    }
    return (f1.num * f2.den) / (f1.den * f2.num);
}

} // namespace

Fp2Element weil_pairing(const Point &p, const Point &q, const TorsionContext &ctx) {
    ctx.require_torsion(p);
    ctx.require_torsion(q);
    const FieldRef &field = ctx.field();
    if (p.is_identity() || q.is_identity())
        return Fp2Element::one(field);

    const Curve &curve = ctx.curve();
    const mpz_class &n = ctx.torsion_order();
    // The value does not depend on the shift, so a fixed seed keeps this a pure function.
    Rng rng(0x5eed5eedULL);
    for (unsigned attempt = 0; attempt < ctx.limits().pairing_attempts; ++attempt) {
        const Point s = curve.random_point(rng);
        const Point neg_s = curve.neg(s);
        auto fp = miller_ratio(curve, p, n, curve.add_unchecked(q, s), s);
        if (!fp)
            continue;
        auto fq = miller_ratio(curve, q, n, curve.add_unchecked(p, neg_s), neg_s);
        if (!fq)
            continue;
        return *fp / *fq;
    }
    fail(ErrorKind::RetryLimitExceeded, "Weil pairing: no usable auxiliary point");
}

Point cofactor_project(const Point &r, const TorsionContext &ctx) {
    return ctx.curve().scalar_mul(ctx.cofactor(), r);
}

bool is_independent(const Point &p, const Point &q, const TorsionContext &ctx) {
    Fp2Element g = weil_pairing(p, q, ctx);
    return !g.pow(ipow(ctx.ell(), ctx.e() - 1)).is_one();
}

namespace {

bool has_full_order(const Point &k, const TorsionContext &ctx) {
    return !ctx.curve().scalar_mul_unchecked(ipow(ctx.ell(), ctx.e() - 1), k).is_identity();
}

Point sample_full_order(const TorsionContext &ctx, Rng &rng, BasisSearchStats *stats) {
    for (unsigned attempt = 0; attempt < ctx.limits().basis_attempts; ++attempt) {
        if (stats)
            ++stats->point_samples;
        Point k = cofactor_project(ctx.curve().random_point(rng), ctx);
        if (has_full_order(k, ctx))
            return k;
    }
    fail(ErrorKind::RetryLimitExceeded, "no point of order ell^e found");
}

// Samples full-order partners for k until the pairing certifies independence.
std::pair<Point, Fp2Element> find_partner(const Point &k, const TorsionContext &ctx, Rng &rng,
                                          BasisSearchStats *stats) {
    const mpz_class top = ipow(ctx.ell(), ctx.e() - 1);
    for (unsigned attempt = 0; attempt < ctx.limits().basis_attempts; ++attempt) {
        Point candidate = sample_full_order(ctx, rng, stats);
        if (stats)
            ++stats->pairing_tests;
        Fp2Element g = weil_pairing(k, candidate, ctx);
        if (!g.pow(top).is_one())
            return {std::move(candidate), std::move(g)};
    }
    fail(ErrorKind::RetryLimitExceeded, "no independent partner found");
}

} // namespace

TorsionBasis find_basis(const TorsionContext &ctx, Rng &rng, BasisSearchStats *stats) {
    Point p = sample_full_order(ctx, rng, stats);
    auto [q, g] = find_partner(p, ctx, rng, stats);
    return {std::move(p), std::move(q), std::move(g)};
}

Point complete_basis(const Point &k, const TorsionContext &ctx, Rng &rng, BasisSearchStats *stats) {
    if (point_lpower_order(k, ctx.ell(), ctx.e(), ctx.curve()) != ctx.e())
        fail(ErrorKind::OrderError, "complete_basis needs a point of order ell^e");
    return find_partner(k, ctx, rng, stats).first;
}

} // namespace grex
