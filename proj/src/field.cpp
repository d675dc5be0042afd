#include "grex/field.hpp"

#include <tuple>
#include <utility>

#include "grex/error.hpp"

namespace grex {

namespace {
thread_local OpCounts tl_counts;
} // namespace

OpCounts &op_counts() { return tl_counts; }
void reset_op_counts() { tl_counts = {}; }

PrimeField::PrimeField(mpz_class p) : p_(std::move(p)) {
    if (!is_probable_prime(p_))
        fail(ErrorKind::NotPrime, to_decimal(p_) + " is not prime");
    if (mod(p_, 4) != 3)
        fail(ErrorKind::BadParams, "modulus " + to_decimal(p_) + " is not 3 mod 4");
    sqrt_exp_ = (p_ + 1) / 4;
}

std::shared_ptr<const PrimeField> PrimeField::create(mpz_class p) {
    return std::make_shared<const PrimeField>(std::move(p));
}

void check_same_field(const FieldRef &a, const FieldRef &b) {
    if (a == b && a)
        return;
    if (!a || !b || a->modulus() != b->modulus())
        fail(ErrorKind::ModulusMismatch, "operands live in different fields");
}

// ---------------------------------------------------------------------------
// F_p

FpElement::FpElement(FieldRef field, const mpz_class &value) : field_(std::move(field)) {
    if (!field_)
        fail(ErrorKind::ModulusMismatch, "element without a field");
    v_ = mod(value, field_->modulus());
}

FpElement FpElement::operator+(const FpElement &o) const {
    check_same_field(field_, o.field_);
    return {field_, v_ + o.v_};
}

FpElement FpElement::operator-(const FpElement &o) const {
    check_same_field(field_, o.field_);
    return {field_, v_ - o.v_};
}

FpElement FpElement::operator*(const FpElement &o) const {
    check_same_field(field_, o.field_);
    return {field_, v_ * o.v_};
}

FpElement FpElement::operator-() const { return {field_, -v_}; }

bool FpElement::operator==(const FpElement &o) const {
    check_same_field(field_, o.field_);
    return v_ == o.v_;
}

FpElement FpElement::inv() const {
    if (is_zero())
        fail(ErrorKind::DivisionByZero, "inverse of zero in F_p");
    return {field_, inverse_mod(v_, field_->modulus())};
}

FpElement FpElement::pow(const mpz_class &k) const {
    if (k < 0)
        return inv().pow(-k);
    mpz_class r;
    mpz_powm(r.get_mpz_t(), v_.get_mpz_t(), k.get_mpz_t(), field_->modulus().get_mpz_t());
    return {field_, r};
}

bool FpElement::is_square() const {
    return mpz_legendre(v_.get_mpz_t(), field_->modulus().get_mpz_t()) >= 0;
}

std::optional<FpElement> FpElement::sqrt() const {
    FpElement s = pow(field_->sqrt_exponent());
    if (!(s * s == *this))
        return std::nullopt;
    mpz_class other = field_->modulus() - s.v_;
    if (s.v_ != 0 && other < s.v_)
        return FpElement(field_, other);
    return s;
}

// ---------------------------------------------------------------------------
// F_{p^2}

Fp2Element::Fp2Element(FieldRef field, const mpz_class &c0, const mpz_class &c1)
    : field_(std::move(field)) {
    if (!field_)
        fail(ErrorKind::ModulusMismatch, "element without a field");
    c0_ = mod(c0, field_->modulus());
    c1_ = mod(c1, field_->modulus());
}

Fp2Element Fp2Element::random(const FieldRef &field, Rng &rng) {
    mpz_class c0 = random_below(field->modulus(), rng);
    mpz_class c1 = random_below(field->modulus(), rng);
    return {field, c0, c1};
}

Fp2Element Fp2Element::operator+(const Fp2Element &o) const {
    check_same_field(field_, o.field_);
    return {field_, c0_ + o.c0_, c1_ + o.c1_};
}

Fp2Element Fp2Element::operator-(const Fp2Element &o) const {
    check_same_field(field_, o.field_);
    return {field_, c0_ - o.c0_, c1_ - o.c1_};
}

Fp2Element Fp2Element::operator*(const Fp2Element &o) const {
    check_same_field(field_, o.field_);
    ++tl_counts.fp2_mul;
    // i^2 = -1
    return {field_, c0_ * o.c0_ - c1_ * o.c1_, c0_ * o.c1_ + c1_ * o.c0_};
}

Fp2Element Fp2Element::operator-() const { return {field_, -c0_, -c1_}; }

bool Fp2Element::operator==(const Fp2Element &o) const {
    check_same_field(field_, o.field_);
    return c0_ == o.c0_ && c1_ == o.c1_;
}

Fp2Element Fp2Element::scale(const mpz_class &k) const { return {field_, c0_ * k, c1_ * k}; }

Fp2Element Fp2Element::conj() const { return {field_, c0_, -c1_}; }

FpElement Fp2Element::norm() const { return {field_, c0_ * c0_ + c1_ * c1_}; }

Fp2Element Fp2Element::inv() const {
    if (is_zero())
        fail(ErrorKind::DivisionByZero, "inverse of zero in F_p2");
    ++tl_counts.fp2_inv;
    mpz_class n = inverse_mod(norm().value(), field_->modulus());
    return {field_, c0_ * n, -c1_ * n};
}

Fp2Element Fp2Element::pow(const mpz_class &k) const {
    if (k < 0)
        return inv().pow(-k);
    Fp2Element result = one(field_);
    const size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(k.get_mpz_t(), i))
            result = result * *this;
    }
    return result;
}

bool Fp2Element::is_square() const { return norm().is_square(); }

std::optional<Fp2Element> Fp2Element::sqrt() const {
    if (is_zero())
        return *this;
    if (!is_square())
        return std::nullopt;

    Fp2Element s;
    if (c1_ == 0) {
        FpElement a = real();
        if (auto r = a.sqrt())
            s = Fp2Element(field_, r->value(), 0);
        else // -1 is a non-residue, so -a is a square and sqrt(a) = i*sqrt(-a)
            s = Fp2Element(field_, 0, (-a).sqrt()->value());
    } else {
        FpElement alpha = *norm().sqrt();
        FpElement half = FpElement(field_, 2).inv();
        FpElement c0 = real();
        FpElement t = (c0 + alpha) * half;
        if (!t.is_square())
            t = (c0 - alpha) * half;
        FpElement x0 = *t.sqrt();
        FpElement x1 = imag() * (FpElement(field_, 2) * x0).inv();
        s = Fp2Element(field_, x0.value(), x1.value());
    }

    Fp2Element neg = -s;
    if (std::tie(neg.c0_, neg.c1_) < std::tie(s.c0_, s.c1_))
        return neg;
    return s;
}

std::ostream &operator<<(std::ostream &os, const Fp2Element &a) {
    return os << a.c0() << " + " << a.c1() << "*i";
}

} // namespace grex
