#pragma once

#include <ostream>

#include "grex/field.hpp"

namespace grex {

/// Affine point or the identity O.
class Point {
public:
    Point() = default; // identity
    Point(Fp2Element x, Fp2Element y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

    static Point identity() { return {}; }

    bool is_identity() const { return !affine_; }
    const Fp2Element &x() const { return x_; }
    const Fp2Element &y() const { return y_; }

    bool operator==(const Point &o) const {
        if (affine_ != o.affine_)
            return false;
        return !affine_ || (x_ == o.x_ && y_ == o.y_);
    }
    bool operator!=(const Point &o) const { return !(*this == o); }

private:
    bool affine_ = false;
    Fp2Element x_;
    Fp2Element y_;
};

std::ostream &operator<<(std::ostream &os, const Point &pt);

/// y^2 = x^3 + a*x + b over F_{p^2}, with #E(F_{p^2}) = order_root^2.
class Curve {
public:
    /// Throws BadParams on a singular curve.
    Curve(FieldRef field, Fp2Element a, Fp2Element b, mpz_class order_root);

    /// y^2 = x^3 + x, supersingular for p = 3 (mod 4), with order_root p + 1.
    static Curve supersingular(FieldRef field);

    const FieldRef &field() const { return field_; }
    const Fp2Element &a() const { return a_; }
    const Fp2Element &b() const { return b_; }
    const mpz_class &order_root() const { return order_root_; }

    bool is_on_curve(const Point &pt) const;
    /// Builds an affine point, throwing OffCurve if it does not satisfy the equation.
    Point point(const Fp2Element &x, const Fp2Element &y) const;

    /// Group law with membership checks on both inputs.
    Point add(const Point &p, const Point &q) const;
    Point neg(const Point &p) const;
    Point sub(const Point &p, const Point &q) const { return add(p, neg(q)); }
    Point scalar_mul(const mpz_class &k, const Point &p) const;

    /// Group law for inputs already known to lie on the curve.
    Point add_unchecked(const Point &p, const Point &q) const;
    Point dbl_unchecked(const Point &p) const;
    Point scalar_mul_unchecked(const mpz_class &k, const Point &p) const;

    Point random_point(Rng &rng) const;

private:
    FieldRef field_;
    Fp2Element a_;
    Fp2Element b_;
    mpz_class order_root_;
};

/// u such that ord(K) = ell^u, found by walking ell^j*K for j = 0..e.
/// Throws NotInTorsion when ell^e*K != O.
unsigned point_lpower_order(const Point &k, unsigned ell, unsigned e, const Curve &curve);

} // namespace grex
