#pragma once

#include "grex/dlog.hpp"
#include "grex/group.hpp"
#include "grex/torsion.hpp"

namespace grex {

/// E[ell^e] of a TorsionContext as a RankTwoGroup. Elements handed to the
/// solvers are checked once via require_member; the arithmetic below then
/// skips the per-operation curve-equation checks.
class CurveTorsionGroup {
public:
    using Element = Point;
    using Basis = TorsionBasis;

    explicit CurveTorsionGroup(TorsionContext ctx) : ctx_(std::move(ctx)) {}

    const TorsionContext &context() const { return ctx_; }
    unsigned ell() const { return ctx_.ell(); }
    unsigned e() const { return ctx_.e(); }
    const mpz_class &torsion_order() const { return ctx_.torsion_order(); }

    Point identity() const { return Point::identity(); }
    Point add(const Point &a, const Point &b) const { return ctx_.curve().add_unchecked(a, b); }
    Point neg(const Point &a) const { return ctx_.curve().neg(a); }
    Point mul(const mpz_class &k, const Point &a) const { return ctx_.curve().scalar_mul_unchecked(k, a); }

    bool is_member(const Point &a) const { return ctx_.in_torsion(a); }
    void require_member(const Point &a) const { ctx_.require_torsion(a); }
    unsigned lpower_order(const Point &a) const { return point_lpower_order(a, ell(), e(), ctx_.curve()); }
    TorsionBasis find_basis(Rng &rng) const { return grex::find_basis(ctx_, rng); }
    Point complete_basis(const Point &k, Rng &rng) const { return grex::complete_basis(k, ctx_, rng); }
    ExtendedDlog extended_dlog(const Point &k, const TorsionBasis &basis) const {
        return grex::extended_dlog(k, basis, ctx_);
    }
    bool is_independent(const Point &a, const Point &b) const { return grex::is_independent(a, b, ctx_); }

private:
    TorsionContext ctx_;
};

} // namespace grex
