#include "grex/model.hpp"

#include <numeric>
#include <sstream>

#include "grex/error.hpp"

namespace grex {

namespace {

std::int64_t reduce(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
}

std::int64_t reduce(const mpz_class &k, std::int64_t n) {
    return static_cast<std::int64_t>(mpz_fdiv_ui(k.get_mpz_t(), static_cast<unsigned long>(n)));
}

std::int64_t checked_power(unsigned ell, unsigned e) {
    mpz_class n = ipow(ell, e);
    if (!n.fits_slong_p() || n > (std::int64_t{1} << 31))
        fail(ErrorKind::TooLarge, "model group order ell^e is too large");
    return n.get_si();
}

} // namespace

// ---------------------------------------------------------------------------
// ModelGroup

ModelGroup::ModelGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty())
        fail(ErrorKind::BadParams, "model group needs at least one factor");
    for (std::int64_t n : orders_)
        if (n < 2 || n > (std::int64_t{1} << 31))
            fail(ErrorKind::BadParams, "cyclic factor orders must lie in [2, 2^31]");
}

mpz_class ModelGroup::cardinality() const {
    mpz_class c = 1;
    for (std::int64_t n : orders_)
        c *= static_cast<long>(n);
    return c;
}

void ModelGroup::check(const ModelElement &a) const {
    if (a.coords.size() != orders_.size())
        fail(ErrorKind::BadParams, "coordinate count does not match the group rank");
}

ModelElement ModelGroup::identity() const { return {std::vector<std::int64_t>(orders_.size(), 0)}; }

ModelElement ModelGroup::element(std::vector<std::int64_t> coords) const {
    ModelElement a{std::move(coords)};
    check(a);
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        a.coords[i] = reduce(a.coords[i], orders_[i]);
    return a;
}

ModelElement ModelGroup::generator(std::size_t i) const {
    ModelElement g = identity();
    g.coords.at(i) = 1;
    return g;
}

ModelElement ModelGroup::add(const ModelElement &a, const ModelElement &b) const {
    check(a);
    check(b);
    ModelElement c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        c.coords[i] += b.coords[i];
        if (c.coords[i] >= orders_[i])
            c.coords[i] -= orders_[i];
    }
    return c;
}

ModelElement ModelGroup::neg(const ModelElement &a) const {
    check(a);
    ModelElement c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        c.coords[i] = c.coords[i] == 0 ? 0 : orders_[i] - c.coords[i];
    return c;
}

ModelElement ModelGroup::sub(const ModelElement &a, const ModelElement &b) const { return add(a, neg(b)); }

ModelElement ModelGroup::mul(std::int64_t k, const ModelElement &a) const {
    check(a);
    ModelElement c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        c.coords[i] = mulmod(reduce(k, orders_[i]), c.coords[i], orders_[i]);
    return c;
}

ModelElement ModelGroup::mul(const mpz_class &k, const ModelElement &a) const {
    check(a);
    ModelElement c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        c.coords[i] = mulmod(reduce(k, orders_[i]), c.coords[i], orders_[i]);
    return c;
}

mpz_class ModelGroup::order(const ModelElement &a) const {
    check(a);
    mpz_class result = 1;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        std::int64_t n = orders_[i];
        mpz_class ord = static_cast<long>(n / std::gcd(n, a.coords[i]));
        mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), ord.get_mpz_t());
    }
    return result;
}

// ---------------------------------------------------------------------------
// Root extraction from the exponent vector

ModelElement generic_root(const ModelElement &h, unsigned ell, unsigned r, const ModelGroup &group) {
    group.check(h);
    if (ell < 2 || !is_probable_prime(ell))
        fail(ErrorKind::BadParams, "ell must be prime");
    if (r == 0)
        return h;

    // |G| = ell^t * s with gcd(ell, s) = 1.
    mpz_class s = group.cardinality();
    while (mpz_divisible_ui_p(s.get_mpz_t(), ell))
        mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), ell);
    if (mpz_divisible_ui_p(s.get_mpz_t(), ell))
        fail(ErrorKind::BadParams, "gcd(ell, s) != 1");

    const mpz_class lr = ipow(ell, r);
    const mpz_class d = mod(-inverse_mod(s, lr), lr);
    const mpz_class sd1 = s * d + 1;
    if (!mpz_divisible_p(sd1.get_mpz_t(), lr.get_mpz_t()))
        fail(ErrorKind::VerificationFailed, "s*d + 1 is not divisible by ell^r");
    const mpz_class c = sd1 / lr;

    // Lift each coordinate to an integer representative divisible by ell^r.
    ModelElement x = group.mul(c, h);
    for (std::size_t i = 0; i < group.rank(); ++i) {
        const mpz_class n = static_cast<long>(group.orders()[i]);
        const mpz_class g = gcd(n, lr);
        const mpz_class k = h.coords[i];
        if (!mpz_divisible_p(k.get_mpz_t(), g.get_mpz_t()))
            fail(ErrorKind::NotAPower, "element is not an ell^r-th power");
        mpz_class lifted = k;
        while (!mpz_divisible_p(lifted.get_mpz_t(), lr.get_mpz_t()))
            lifted += n;
        const mpz_class coeff = s * (lifted / lr) * d;
        x = group.sub(x, group.mul(coeff, group.generator(i)));
    }

    if (group.mul(lr, x) != h)
        fail(ErrorKind::VerificationFailed, "generic_root failed its round-trip check");
    return x;
}

// ---------------------------------------------------------------------------
// (Z/ell^e)^2 backend

ModelTorsionGroup::ModelTorsionGroup(unsigned ell, unsigned e, RetryLimits limits)
    : ell_(ell), e_(e), n_(0), group_({2}), limits_(limits) {
    if (ell_ < 2 || !is_probable_prime(ell_))
        fail(ErrorKind::BadParams, "ell must be prime");
    if (e_ < 1)
        fail(ErrorKind::BadParams, "e must be positive");
    n_ = checked_power(ell_, e_);
    order_ = static_cast<long>(n_);
    group_ = ModelGroup({n_, n_});
}

bool ModelTorsionGroup::is_member(const Element &a) const { return a.coords.size() == 2; }

void ModelTorsionGroup::require_member(const Element &a) const {
    if (!is_member(a))
        fail(ErrorKind::NotInTorsion, "element does not belong to (Z/ell^e)^2");
}

unsigned ModelTorsionGroup::lpower_order(const Element &a) const {
    require_member(a);
    Element t = a;
    for (unsigned j = 0; j <= e_; ++j) {
        if (t == identity())
            return j;
        t = group_.mul(static_cast<std::int64_t>(ell_), t);
    }
    fail(ErrorKind::NotInTorsion, "element is not killed by ell^e");
}

bool ModelTorsionGroup::is_independent(const Element &a, const Element &b) const {
    require_member(a);
    require_member(b);
    std::int64_t det = mulmod(a.coords[0], b.coords[1], n_) - mulmod(a.coords[1], b.coords[0], n_);
    return reduce(det, ell_) != 0;
}

ModelTorsionGroup::Element ModelTorsionGroup::random_element(Rng &rng) const {
    std::uniform_int_distribution<std::int64_t> dist(0, n_ - 1);
    std::int64_t a = dist(rng);
    std::int64_t b = dist(rng);
    return element(a, b);
}

ModelTorsionGroup::Element ModelTorsionGroup::sample_full_order(Rng &rng) const {
    for (unsigned attempt = 0; attempt < limits_.basis_attempts; ++attempt) {
        Element k = random_element(rng);
        if (reduce(k.coords[0], ell_) != 0 || reduce(k.coords[1], ell_) != 0)
            return k;
    }
    fail(ErrorKind::RetryLimitExceeded, "no element of order ell^e found");
}

ModelTorsionGroup::Basis ModelTorsionGroup::find_basis(Rng &rng) const {
    Element p = sample_full_order(rng);
    return {p, complete_basis(p, rng)};
}

ModelTorsionGroup::Element ModelTorsionGroup::complete_basis(const Element &k, Rng &rng) const {
    if (lpower_order(k) != e_)
        fail(ErrorKind::OrderError, "complete_basis needs an element of order ell^e");
    for (unsigned attempt = 0; attempt < limits_.basis_attempts; ++attempt) {
        Element q = sample_full_order(rng);
        if (is_independent(k, q))
            return q;
    }
    fail(ErrorKind::RetryLimitExceeded, "no independent partner found");
}

ExtendedDlog ModelTorsionGroup::extended_dlog(const Element &k, const Basis &basis) const {
    require_member(k);
    const auto &p = basis.p_gen.coords;
    const auto &q = basis.q_gen.coords;
    std::int64_t det = reduce(mulmod(p[0], q[1], n_) - mulmod(p[1], q[0], n_), n_);
    const mpz_class inv = inverse_mod(det, order_);
    const std::int64_t det_inv = inv.get_si();
    std::int64_t k1 = mulmod(det_inv, reduce(mulmod(k.coords[0], q[1], n_) - mulmod(k.coords[1], q[0], n_), n_), n_);
    std::int64_t k2 = mulmod(det_inv, reduce(mulmod(p[0], k.coords[1], n_) - mulmod(p[1], k.coords[0], n_), n_), n_);
    if (add(group_.mul(k1, basis.p_gen), group_.mul(k2, basis.q_gen)) != k)
        fail(ErrorKind::VerificationFailed, "model extended dlog does not reconstruct the element");
    return {mpz_class(static_cast<long>(k1)), mpz_class(static_cast<long>(k2))};
}

// ---------------------------------------------------------------------------
// Exhaustive oracles

namespace {

bool generating(std::int64_t p0, std::int64_t p1, std::int64_t q0, std::int64_t q1, std::int64_t ell) {
    return reduce(p0 * q1 - p1 * q0, ell) != 0;
}

} // namespace

std::optional<std::pair<ModelElement, ModelElement>> brute_force_grep(const ModelElement &k, std::int64_t m,
                                                                      std::int64_t n, unsigned ell, unsigned e) {
    const std::int64_t order = checked_power(ell, e);
    if (order > kBruteForceMaxOrder)
        fail(ErrorKind::TooLarge, "brute force is limited to ell^e <= 32");
    if (k.coords.size() != 2)
        fail(ErrorKind::BadParams, "brute force works on rank-2 elements");
    const std::int64_t k0 = reduce(k.coords[0], order);
    const std::int64_t k1 = reduce(k.coords[1], order);
    m = reduce(m, order);
    n = reduce(n, order);
    for (std::int64_t p0 = 0; p0 < order; ++p0)
        for (std::int64_t p1 = 0; p1 < order; ++p1)
            for (std::int64_t q0 = 0; q0 < order; ++q0)
                for (std::int64_t q1 = 0; q1 < order; ++q1) {
                    if (!generating(p0, p1, q0, q1, ell))
                        continue;
                    if ((m * p0 + n * q0) % order == k0 && (m * p1 + n * q1) % order == k1)
                        return std::make_pair(ModelElement{{p0, p1}}, ModelElement{{q0, q1}});
                }
    return std::nullopt;
}

std::vector<std::uint8_t> enumerate_solvable(unsigned ell, unsigned e, std::int64_t max_order) {
    const std::int64_t order = checked_power(ell, e);
    if (order > max_order)
        fail(ErrorKind::TooLarge, "enumeration exceeds its size cap");
    const std::int64_t n2 = order * order;
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(n2 * n2), 0);
    for (std::int64_t p0 = 0; p0 < order; ++p0)
        for (std::int64_t p1 = 0; p1 < order; ++p1)
            for (std::int64_t q0 = 0; q0 < order; ++q0)
                for (std::int64_t q1 = 0; q1 < order; ++q1) {
                    if (!generating(p0, p1, q0, q1, ell))
                        continue;
                    for (std::int64_t m = 0; m < order; ++m)
                        for (std::int64_t n = 0; n < order; ++n) {
                            std::int64_t k0 = (m * p0 + n * q0) % order;
                            std::int64_t k1 = (m * p1 + n * q1) % order;
                            flags[static_cast<std::size_t>(((m * order + n) * order + k0) * order + k1)] = 1;
                        }
                }
    return flags;
}

std::vector<ExistenceRow> exhaustive_existence_table(unsigned ell, unsigned e) {
    const std::int64_t order = checked_power(ell, e);
    if (order > kExistenceTableMaxOrder)
        fail(ErrorKind::TooLarge, "existence tables are limited to ell^e <= 16");
    const std::vector<std::uint8_t> flags = enumerate_solvable(ell, e);
    const ModelTorsionGroup group(ell, e);

    std::vector<ExistenceRow> rows;
    rows.reserve(flags.size());
    std::size_t idx = 0;
    for (std::int64_t m = 0; m < order; ++m)
        for (std::int64_t n = 0; n < order; ++n) {
            const unsigned r = std::min(valuation(m, ell, e), valuation(n, ell, e));
            for (std::int64_t k0 = 0; k0 < order; ++k0)
                for (std::int64_t k1 = 0; k1 < order; ++k1) {
                    const unsigned u = group.lpower_order(group.element(k0, k1));
                    rows.push_back({m, n, k0, k1, u, r, flags[idx++] != 0});
                }
        }
    return rows;
}

std::string existence_table_csv(const std::vector<ExistenceRow> &rows) {
    std::ostringstream out;
    out << "m,n,k0,k1,u,r,solvable\n";
    for (const ExistenceRow &row : rows)
        out << row.m << ',' << row.n << ',' << row.k0 << ',' << row.k1 << ',' << row.u << ',' << row.r << ','
            << (row.solvable ? 1 : 0) << '\n';
    return out.str();
}

} // namespace grex
