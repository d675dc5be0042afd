#include "grex/json.hpp"

#include "grex/error.hpp"

namespace grex {

namespace {

const json &member(const json &j, const char *key) {
    if (!j.is_object())
        fail(ErrorKind::Malformed, std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        fail(ErrorKind::Malformed, std::string("missing field '") + key + "'");
    return *it;
}

unsigned small_uint(const json &j, const char *key) {
    const json &v = member(j, key);
    if (!v.is_number_unsigned() || v.get<unsigned long long>() > 0xFFFFFFFFULL)
        fail(ErrorKind::Malformed, std::string("field '") + key + "' must be a non-negative integer");
    return v.get<unsigned>();
}

mpz_class coordinate(const json &j, const char *key, const FieldRef &field) {
    mpz_class v = integer_from_json(member(j, key));
    if (v < 0 || v >= field->modulus())
        fail(ErrorKind::Malformed, std::string("coordinate '") + key + "' is not reduced");
    return v;
}

} // namespace

mpz_class integer_from_json(const json &j) {
    if (j.is_string())
        return parse_decimal(j.get<std::string>());
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<long long>()), 10);
    fail(ErrorKind::Malformed, "expected a decimal string");
}

json to_json(const Fp2Element &a) { return json{{"c0", to_decimal(a.c0())}, {"c1", to_decimal(a.c1())}}; }

Fp2Element fp2_from_json(const json &j, const FieldRef &field) {
    mpz_class c0 = coordinate(j, "c0", field);
    mpz_class c1 = coordinate(j, "c1", field);
    return {field, c0, c1};
}

json to_json(const Point &pt) {
    if (pt.is_identity())
        return "identity";
    return json{{"x", to_json(pt.x())}, {"y", to_json(pt.y())}};
}

Point raw_point_from_json(const json &j, const FieldRef &field) {
    if (j.is_string()) {
        if (j.get<std::string>() == "identity")
            return Point::identity();
        fail(ErrorKind::Malformed, "a point is an object or the string \"identity\"");
    }
    return Point(fp2_from_json(member(j, "x"), field), fp2_from_json(member(j, "y"), field));
}

Point point_from_json(const json &j, const Curve &curve) {
    Point pt = raw_point_from_json(j, curve.field());
    if (!curve.is_on_curve(pt))
        fail(ErrorKind::OffCurve, "point is not on the curve");
    return pt;
}

json to_json(const TorsionContext &ctx) {
    return json{{"p", to_decimal(ctx.field()->modulus())},
                {"l", ctx.ell()},
                {"e", ctx.e()},
                {"f", to_decimal(ctx.cofactor())},
                {"a", to_json(ctx.curve().a())},
                {"b", to_json(ctx.curve().b())}};
}

TorsionContext context_from_json(const json &j) {
    const mpz_class p = integer_from_json(member(j, "p"));
    const unsigned ell = small_uint(j, "l");
    const unsigned e = small_uint(j, "e");
    const mpz_class f = integer_from_json(member(j, "f"));
    if (ell < 2 || e < 1 || f < 1)
        fail(ErrorKind::BadParams, "context needs l >= 2, e >= 1, f >= 1");
    FieldRef field = PrimeField::create(p);
    Fp2Element a = fp2_from_json(member(j, "a"), field);
    Fp2Element b = fp2_from_json(member(j, "b"), field);
    Curve curve(field, std::move(a), std::move(b), ipow(ell, e) * f);
    return {std::move(curve), ell, e, f};
}

json to_json(const TorsionBasis &basis) {
    return json{{"P", to_json(basis.p_gen)}, {"Q", to_json(basis.q_gen)}, {"pairing", to_json(basis.pairing)}};
}

TorsionBasis basis_from_json(const json &j, const TorsionContext &ctx) {
    return {point_from_json(member(j, "P"), ctx.curve()), point_from_json(member(j, "Q"), ctx.curve()),
            fp2_from_json(member(j, "pairing"), ctx.field())};
}

json to_json(const GrepInstance<Point> &inst) {
    return json{{"K", to_json(inst.k)}, {"m", to_decimal(inst.m)}, {"n", to_decimal(inst.n)}};
}

GrepInstance<Point> grep_instance_from_json(const json &j, const TorsionContext &ctx) {
    return {point_from_json(member(j, "K"), ctx.curve()), integer_from_json(member(j, "m")),
            integer_from_json(member(j, "n"))};
}

json to_json(const SimulInstance<Point> &inst) {
    return json{{"K1", to_json(inst.k1)},      {"K2", to_json(inst.k2)},      {"m1", to_decimal(inst.m1)},
                {"n1", to_decimal(inst.n1)},   {"m2", to_decimal(inst.m2)},   {"n2", to_decimal(inst.n2)}};
}

SimulInstance<Point> simul_instance_from_json(const json &j, const TorsionContext &ctx) {
    return {point_from_json(member(j, "K1"), ctx.curve()), point_from_json(member(j, "K2"), ctx.curve()),
            integer_from_json(member(j, "m1")),            integer_from_json(member(j, "n1")),
            integer_from_json(member(j, "m2")),            integer_from_json(member(j, "n2"))};
}

} // namespace grex
