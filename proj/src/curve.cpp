#include "grex/curve.hpp"

#include "grex/error.hpp"

namespace grex {

std::ostream &operator<<(std::ostream &os, const Point &pt) {
    if (pt.is_identity())
        return os << "O";
    return os << "(" << pt.x() << ", " << pt.y() << ")";
}

Curve::Curve(FieldRef field, Fp2Element a, Fp2Element b, mpz_class order_root)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), order_root_(std::move(order_root)) {
    check_same_field(field_, a_.field());
    check_same_field(field_, b_.field());
    Fp2Element disc = (a_ * a_ * a_).scale(4) + (b_ * b_).scale(27);
    if (disc.is_zero())
        fail(ErrorKind::BadParams, "singular curve: 4a^3 + 27b^2 = 0");
}

Curve Curve::supersingular(FieldRef field) {
    mpz_class n0 = field->modulus() + 1;
    Fp2Element a = Fp2Element::one(field);
    Fp2Element b = Fp2Element::zero(field);
    return {std::move(field), std::move(a), std::move(b), std::move(n0)};
}

bool Curve::is_on_curve(const Point &pt) const {
    if (pt.is_identity())
        return true;
    const Fp2Element &x = pt.x();
    const Fp2Element &y = pt.y();
    if (x.field() != field_ || y.field() != field_) {
        if (!x.field() || !y.field() || x.field()->modulus() != field_->modulus() ||
            y.field()->modulus() != field_->modulus())
            return false;
    }
    return y * y == x * x * x + a_ * x + b_;
}

Point Curve::point(const Fp2Element &x, const Fp2Element &y) const {
    Point pt(x, y);
    if (!is_on_curve(pt))
        fail(ErrorKind::OffCurve, "point is not on the curve");
    return pt;
}

Point Curve::add(const Point &p, const Point &q) const {
    if (!is_on_curve(p) || !is_on_curve(q))
        fail(ErrorKind::OffCurve, "add: operand is not on the curve");
    return add_unchecked(p, q);
}

Point Curve::neg(const Point &p) const {
    if (p.is_identity())
        return p;
    return Point(p.x(), -p.y());
}

Point Curve::dbl_unchecked(const Point &p) const {
    if (p.is_identity())
        return p;
    // 2-torsion: the tangent is vertical.
    if (p.y().is_zero())
        return Point::identity();
    ++op_counts().point_dbl;
    const Fp2Element &x = p.x();
    Fp2Element lambda = ((x * x).scale(3) + a_) / p.y().scale(2);
    Fp2Element x3 = lambda * lambda - x.scale(2);
    Fp2Element y3 = lambda * (x - x3) - p.y();
    return Point(std::move(x3), std::move(y3));
}

Point Curve::add_unchecked(const Point &p, const Point &q) const {
    if (p.is_identity())
        return q;
    if (q.is_identity())
        return p;
    if (p.x() == q.x()) {
        if (p.y() == q.y())
            return dbl_unchecked(p);
        return Point::identity();
    }
    ++op_counts().point_add;
    Fp2Element lambda = (q.y() - p.y()) / (q.x() - p.x());
    Fp2Element x3 = lambda * lambda - p.x() - q.x();
    Fp2Element y3 = lambda * (p.x() - x3) - p.y();
    return Point(std::move(x3), std::move(y3));
}

Point Curve::scalar_mul_unchecked(const mpz_class &k, const Point &p) const {
    if (k < 0)
        return scalar_mul_unchecked(-k, neg(p));
    Point acc;
    const size_t bits = k == 0 ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = dbl_unchecked(acc);
        if (mpz_tstbit(k.get_mpz_t(), i))
            acc = add_unchecked(acc, p);
    }
    return acc;
}

Point Curve::scalar_mul(const mpz_class &k, const Point &p) const {
    if (!is_on_curve(p))
        fail(ErrorKind::OffCurve, "scalar_mul: point is not on the curve");
    return scalar_mul_unchecked(k, p);
}

Point Curve::random_point(Rng &rng) const {
    for (;;) {
        Fp2Element x = Fp2Element::random(field_, rng);
        Fp2Element rhs = x * x * x + a_ * x + b_;
        auto y = rhs.sqrt();
        if (!y)
            continue;
        if (rng() & 1)
            return Point(std::move(x), -*y);
        return Point(std::move(x), std::move(*y));
    }
}

unsigned point_lpower_order(const Point &k, unsigned ell, unsigned e, const Curve &curve) {
    if (!curve.is_on_curve(k))
        fail(ErrorKind::OffCurve, "order: point is not on the curve");
    const mpz_class l = ell;
    Point t = k;
    for (unsigned j = 0; j <= e; ++j) {
        if (t.is_identity())
            return j;
        if (j < e)
            t = curve.scalar_mul_unchecked(l, t);
    }
    fail(ErrorKind::NotInTorsion, "point is not killed by ell^e");
}

} // namespace grex
