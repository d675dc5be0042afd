#include "grex/selftest.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "grex/commands.hpp"
#include "grex/curve_group.hpp"
#include "grex/error.hpp"
#include "grex/model.hpp"
#include "grex/params.hpp"
#include "grex/solver.hpp"

namespace grex {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed;
    std::string detail;
};

CriterionResult timed(std::string id, std::string name, const std::function<Outcome()> &body) {
    CriterionResult res{std::move(id), std::move(name), false, {}, 0.0};
    const auto start = Clock::now();
    try {
        Outcome out = body();
        res.passed = out.passed;
        res.detail = std::move(out.detail);
    } catch (const std::exception &ex) {
        res.passed = false;
        res.detail = std::string("unexpected exception: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

std::vector<TorsionContext> fixture_contexts() {
    return {gen_params({2, 4, 10000}), gen_params({3, 3, 10000})};
}

std::string ctx_label(const TorsionContext &ctx) {
    std::ostringstream out;
    out << "p=" << ctx.field()->modulus() << " (l=" << ctx.ell() << ", e=" << ctx.e() << ")";
    return out.str();
}

mpz_class random_scalar(const mpz_class &bound, Rng &rng) { return random_below(bound, rng); }

// Solvable instance m*P0 + n*Q0 planted on a generating pair, with the
// valuation r of gcd(m, n) drawn so that both algorithm cases occur.
template <RankTwoGroup G>
GrepInstance<typename G::Element> planted_grep(const G &g, const typename G::Basis &basis, Rng &rng) {
    const unsigned ell = g.ell();
    const unsigned e = g.e();
    unsigned r = 0;
    if (rng() & 1)
        r = 1 + static_cast<unsigned>(rng() % e);
    if (r == e)
        return {g.identity(), 0, 0};
    const mpz_class sub = ipow(ell, e - r);
    mpz_class m1, n1;
    do {
        m1 = random_scalar(sub, rng);
        n1 = random_scalar(sub, rng);
    } while (mpz_divisible_ui_p(m1.get_mpz_t(), ell) && mpz_divisible_ui_p(n1.get_mpz_t(), ell));
    const mpz_class lr = ipow(ell, r);
    mpz_class m = lr * m1;
    mpz_class n = lr * n1;
    auto k = g.add(g.mul(m, basis.p_gen), g.mul(n, basis.q_gen));
    return {std::move(k), std::move(m), std::move(n)};
}

// #E(F_{p^2}) = 1 + sum_x (1 + chi(x^3 + a x + b)), chi by Euler's criterion.
mpz_class brute_force_point_count(const Curve &curve) {
    const FieldRef &field = curve.field();
    const mpz_class &p = field->modulus();
    const mpz_class euler = (p * p - 1) / 2;
    mpz_class count = 1;
    for (mpz_class c0 = 0; c0 < p; ++c0)
        for (mpz_class c1 = 0; c1 < p; ++c1) {
            Fp2Element x(field, c0, c1);
            Fp2Element rhs = x * x * x + curve.a() * x + curve.b();
            if (rhs.is_zero())
                count += 1;
            else if (rhs.pow(euler).is_one())
                count += 2;
        }
    return count;
}

std::int64_t red(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

SelftestSizes SelftestSizes::full() { return {{{2, 2}, {2, 3}, {3, 2}}, 500, 1000, 100, 200, 16, 200, {8, 16, 32}, 10}; }

SelftestSizes SelftestSizes::quick() { return {{{2, 2}}, 100, 100, 20, 50, 4, 30, {8, 16}, 3}; }

// ---------------------------------------------------------------------------
// 1. Solver success on the model group coincides with u + r = e and with the
//    brute-force solvable set, for every (m, n, K).

CriterionResult check_existence_exhaustive(const SelftestSizes &sizes, std::uint64_t seed) {
    return timed("1", "existence criterion vs exhaustive search on (Z/l^e)^2", [&]() -> Outcome {
        Rng rng(seed);
        std::ostringstream detail;
        std::uint64_t total = 0, mismatches = 0;
        for (auto [ell, e] : sizes.existence_shapes) {
            const ModelTorsionGroup g(ell, e);
            const ModelGroup &plain = g.group();
            const std::int64_t n = g.torsion_order().get_si();
            const std::vector<std::uint8_t> oracle = enumerate_solvable(ell, e);
            std::uint64_t shape_cases = 0, shape_bad = 0;
            std::size_t idx = 0;
            for (std::int64_t m = 0; m < n; ++m)
                for (std::int64_t nn = 0; nn < n; ++nn) {
                    const unsigned r = std::min(valuation(m, ell, e), valuation(nn, ell, e));
                    for (std::int64_t k0 = 0; k0 < n; ++k0)
                        for (std::int64_t k1 = 0; k1 < n; ++k1, ++idx) {
                            const ModelElement k = g.element(k0, k1);
                            const mpz_class ord = plain.order(k);
                            const unsigned u = valuation(ord, ell, e);
                            const bool predicate = u + r == e;
                            bool solved = false;
                            try {
                                auto sol = solve_grep(GrepInstance<ModelElement>{k, m, nn}, g, rng);
                                const ModelElement lhs = plain.add(plain.mul(m, sol.p), plain.mul(nn, sol.q));
                                const std::int64_t det =
                                    sol.p.coords[0] * sol.q.coords[1] - sol.p.coords[1] * sol.q.coords[0];
                                solved = lhs == k && red(det, ell) != 0;
                            } catch (const Error &err) {
                                if (err.kind() != ErrorKind::NoSolution)
                                    throw;
                            }
                            ++shape_cases;
                            if (solved != predicate || solved != (oracle[idx] != 0))
                                ++shape_bad;
                        }
                }
            detail << "(" << ell << "," << e << "): " << shape_cases << " cases, " << shape_bad << " mismatches; ";
            total += shape_cases;
            mismatches += shape_bad;
        }
        detail << "total " << total;
        return {mismatches == 0, detail.str()};
    });
}

// ---------------------------------------------------------------------------
// 2. ord(mP + nQ) = l^e whenever (P, Q) generates and l does not divide gcd(m, n).

CriterionResult check_order_exhaustive() {
    return timed("2", "order of mP + nQ, exhaustive at (2,3)", [&]() -> Outcome {
        const unsigned ell = 2, e = 3;
        const std::int64_t n = 8;
        const ModelGroup plain({n, n});
        const mpz_class full = n;
        std::uint64_t checked = 0, violations = 0;
        for (std::int64_t p0 = 0; p0 < n; ++p0)
            for (std::int64_t p1 = 0; p1 < n; ++p1)
                for (std::int64_t q0 = 0; q0 < n; ++q0)
                    for (std::int64_t q1 = 0; q1 < n; ++q1) {
                        if (red(p0 * q1 - p1 * q0, ell) == 0)
                            continue;
                        const ModelElement p{{p0, p1}}, q{{q0, q1}};
                        for (std::int64_t m = 0; m < n; ++m)
                            for (std::int64_t nn = 0; nn < n; ++nn) {
                                if (m % ell == 0 && nn % ell == 0)
                                    continue;
                                ++checked;
                                if (plain.order(plain.add(plain.mul(m, p), plain.mul(nn, q))) != full)
                                    ++violations;
                            }
                    }
        (void)e;
        return {violations == 0 && checked > 0,
                std::to_string(checked) + " (pair, m, n) checks, " + std::to_string(violations) + " violations"};
    });
}

// ---------------------------------------------------------------------------
// 3. Root extraction from the exponent vector.

CriterionResult check_generic_root(const SelftestSizes &sizes, std::uint64_t seed) {
    return timed("3", "generic l^r-th root round trip", [&]() -> Outcome {
        std::ostringstream detail;
        bool ok = true;

        const ModelGroup z12({12});
        const ModelElement x = generic_root(z12.element({4}), 2, 2, z12);
        std::vector<std::int64_t> roots;
        for (std::int64_t c = 0; c < 12; ++c)
            if ((4 * c) % 12 == 4)
                roots.push_back(c);
        const bool in_set = std::find(roots.begin(), roots.end(), x.coords[0]) != roots.end();
        const bool worked = x.coords[0] == 1 && (4 * x.coords[0]) % 12 == 4 && in_set && roots.size() == 4;
        ok = ok && worked;
        detail << "Z/12: root " << x.coords[0] << (worked ? " ok" : " WRONG") << "; ";

        Rng rng(seed);
        const ModelGroup g48({48, 48});
        std::uniform_int_distribution<std::int64_t> coord(0, 47);
        unsigned good = 0;
        for (unsigned t = 0; t < sizes.root_trials; ++t) {
            const unsigned r = 1 + static_cast<unsigned>(rng() % 3);
            const ModelElement y = g48.element({coord(rng), coord(rng)});
            const ModelElement h = g48.mul(std::int64_t{1} << r, y);
            const ModelElement root = generic_root(h, 2, r, g48);
            if (g48.mul(std::int64_t{1} << r, root) == h)
                ++good;
        }
        ok = ok && good == sizes.root_trials;
        detail << "(Z/48)^2: " << good << "/" << sizes.root_trials << " round trips";
        return {ok, detail.str()};
    });
}

// ---------------------------------------------------------------------------
// 4. Curve pipeline: solve then verify through the JSON commands.

CriterionResult check_curve_end_to_end(const SelftestSizes &sizes, std::uint64_t seed) {
    return timed("4", "curve end-to-end solve + verify", [&]() -> Outcome {
        std::ostringstream detail;
        bool ok = true;
        for (const TorsionContext &ctx : fixture_contexts()) {
            const mpz_class count = brute_force_point_count(ctx.curve());
            const mpz_class expected = ctx.curve().order_root() * ctx.curve().order_root();
            const bool count_ok = count == expected;
            ok = ok && count_ok;
            detail << ctx_label(ctx) << ": #E=" << count << (count_ok ? "" : " (WRONG)");

            const CurveTorsionGroup g(ctx);
            const json ctx_json = to_json(ctx);
            Rng rng(seed ^ ctx.field()->modulus().get_ui());
            unsigned passed = 0, case1 = 0, case2 = 0;
            const auto start = Clock::now();
            for (unsigned t = 0; t < sizes.curve_instances; ++t) {
                const TorsionBasis basis = find_basis(ctx, rng);
                const auto inst = planted_grep(g, basis, rng);
                const json inst_json = to_json(inst);
                Rng solve_rng(rng());
                const CommandResult solved = cmd_solve(ctx_json, inst_json, solve_rng);
                if (solved.exit_code != kExitOk)
                    continue;
                (solved.output.at("case") == 1 ? case1 : case2)++;
                const CommandResult verdict = cmd_verify(ctx_json, inst_json, solved.output);
                if (verdict.exit_code == kExitOk)
                    ++passed;
            }
            const double secs = std::chrono::duration<double>(Clock::now() - start).count();
            const bool curve_ok = passed == sizes.curve_instances && secs < 30.0;
            ok = ok && curve_ok;
            detail << ", " << passed << "/" << sizes.curve_instances << " verified (case1 " << case1 << ", case2 "
                   << case2 << ") in " << secs << " s; ";
        }
        return {ok, detail.str()};
    });
}

// ---------------------------------------------------------------------------
// 5. Bilinearity, alternation and non-degeneracy of the Weil pairing.

CriterionResult check_pairing_properties(const SelftestSizes &sizes, std::uint64_t seed) {
    return timed("5", "Weil pairing properties", [&]() -> Outcome {
        std::ostringstream detail;
        bool ok = true;
        for (const TorsionContext &ctx : fixture_contexts()) {
            Rng rng(seed + ctx.ell());
            const Curve &curve = ctx.curve();
            const mpz_class &n = ctx.torsion_order();
            auto torsion_point = [&] { return cofactor_project(curve.random_point(rng), ctx); };

            unsigned bilinear = 0, alternating = 0, nondegenerate = 0;
            for (unsigned t = 0; t < sizes.pairing_samples; ++t) {
                const Point p = torsion_point();
                const Point q = torsion_point();
                const mpz_class a = random_below(n, rng);
                const mpz_class b = random_below(n, rng);
                const Fp2Element lhs =
                    weil_pairing(curve.scalar_mul(a, p), curve.scalar_mul(b, q), ctx);
                if (lhs == weil_pairing(p, q, ctx).pow(a * b) && lhs.pow(n).is_one())
                    ++bilinear;
                if (weil_pairing(p, p, ctx).is_one())
                    ++alternating;
            }
            const unsigned bases = std::max(1u, sizes.pairing_samples / 5);
            for (unsigned t = 0; t < bases; ++t) {
                const TorsionBasis basis = find_basis(ctx, rng);
                const Fp2Element g = weil_pairing(basis.p_gen, basis.q_gen, ctx);
                if (g.pow(n).is_one() && !g.pow(ipow(ctx.ell(), ctx.e() - 1)).is_one() && g == basis.pairing)
                    ++nondegenerate;
            }
            const bool ctx_ok =
                bilinear == sizes.pairing_samples && alternating == sizes.pairing_samples && nondegenerate == bases;
            ok = ok && ctx_ok;
            detail << ctx_label(ctx) << ": bilinear " << bilinear << "/" << sizes.pairing_samples << ", alternating "
                   << alternating << "/" << sizes.pairing_samples << ", exact order " << nondegenerate << "/" << bases
                   << "; ";
        }
        return {ok, detail.str()};
    });
}

// ---------------------------------------------------------------------------
// 6. Extended discrete logarithm recovers planted coordinates.

CriterionResult check_extended_dlog(const SelftestSizes &sizes, std::uint64_t seed) {
    return timed("6", "extended dlog round trip", [&]() -> Outcome {
        std::ostringstream detail;
        bool ok = true;
        for (const TorsionContext &ctx : fixture_contexts()) {
            Rng rng(seed * 31 + ctx.ell());
            const Curve &curve = ctx.curve();
            const TorsionBasis basis = find_basis(ctx, rng);
            unsigned good = 0;
            for (unsigned t = 0; t < sizes.dlog_trials; ++t) {
                const mpz_class k1 = random_below(ctx.torsion_order(), rng);
                const mpz_class k2 = random_below(ctx.torsion_order(), rng);
                const Point k = curve.add(curve.scalar_mul(k1, basis.p_gen), curve.scalar_mul(k2, basis.q_gen));
                if (extended_dlog(k, basis, ctx) == ExtendedDlog{k1, k2})
                    ++good;
            }
            ok = ok && good == sizes.dlog_trials;
            detail << ctx_label(ctx) << ": " << good << "/" << sizes.dlog_trials << "; ";
        }
        return {ok, detail.str()};
    });
}

// ---------------------------------------------------------------------------
// 7. Simultaneous extraction against enumeration on (Z/8)^2 and planted
//    curve instances.

namespace {

struct SimulTally {
    std::uint64_t runs = 0;
    std::uint64_t bad = 0;
    std::uint64_t skipped_degenerate = 0;
    std::uint64_t generating = 0;
    std::uint64_t no_power = 0;
    std::uint64_t no_generating = 0;
};

// Model side: every (P, Q) in (Z/8)^2 x (Z/8)^2 is pushed through each
// coefficient tuple, so each (K1, K2) knows whether any solution and any
// generating solution exists, plus the solution itself when it is unique.
void model_simultaneous(const SelftestSizes &sizes, Rng &rng, SimulTally &unique, SimulTally &coset) {
    const unsigned ell = 2, e = 3;
    const std::int64_t n = 8, sq = n * n;
    const ModelTorsionGroup g(ell, e);
    std::vector<std::uint8_t> any(sq * sq), gen(sq * sq);
    std::vector<std::int32_t> sol(sq * sq);
    std::uniform_int_distribution<std::int64_t> pick(0, sq * sq - 1), elem(0, sq - 1);

    for (std::int64_t m1 = 0; m1 < n; ++m1)
        for (std::int64_t n1 = 0; n1 < n; ++n1)
            for (std::int64_t m2 = 0; m2 < n; ++m2)
                for (std::int64_t n2 = 0; n2 < n; ++n2) {
                    const std::int64_t det = red(m1 * n2 - m2 * n1, n);
                    if (det == 0)
                        continue;
                    const bool is_unique = det % ell != 0;
                    if (!is_unique && m1 % ell == 0 && n1 % ell == 0 && m2 % ell == 0 && n2 % ell == 0) {
                        ++coset.skipped_degenerate;
                        continue;
                    }
                    std::fill(any.begin(), any.end(), 0);
                    std::fill(gen.begin(), gen.end(), 0);
                    for (std::int64_t p = 0; p < sq; ++p)
                        for (std::int64_t q = 0; q < sq; ++q) {
                            const std::int64_t p0 = p / n, p1 = p % n, q0 = q / n, q1 = q % n;
                            const std::int64_t k1 = ((m1 * p0 + n1 * q0) % n) * n + (m1 * p1 + n1 * q1) % n;
                            const std::int64_t k2 = ((m2 * p0 + n2 * q0) % n) * n + (m2 * p1 + n2 * q1) % n;
                            const std::int64_t idx = k1 * sq + k2;
                            any[idx] = 1;
                            sol[idx] = static_cast<std::int32_t>(p * sq + q);
                            if (red(p0 * q1 - p1 * q0, ell) != 0)
                                gen[idx] = 1;
                        }

                    SimulTally &tally = is_unique ? unique : coset;
                    for (unsigned t = 0; t < sizes.simul_k_per_tuple; ++t) {
                        std::int64_t idx;
                        if (t % 2 == 0) {
                            idx = pick(rng);
                        } else { // a consistent right-hand side
                            const std::int64_t p = elem(rng), q = elem(rng);
                            const std::int64_t p0 = p / n, p1 = p % n, q0 = q / n, q1 = q % n;
                            idx = (((m1 * p0 + n1 * q0) % n) * n + (m1 * p1 + n1 * q1) % n) * sq +
                                  ((m2 * p0 + n2 * q0) % n) * n + (m2 * p1 + n2 * q1) % n;
                        }
                        const std::int64_t k1 = idx / sq, k2 = idx % sq;
                        SimulInstance<ModelElement> inst{g.element(k1 / n, k1 % n), g.element(k2 / n, k2 % n), m1,
                                                         n1,                         m2,                         n2};
                        ++tally.runs;
                        enum { Solved, NotPower, NoGen } got;
                        SimulSolution<ModelElement> out;
                        try {
                            out = solve_simultaneous(inst, g, rng);
                            got = Solved;
                        } catch (const Error &err) {
                            if (err.kind() == ErrorKind::NotAPower)
                                got = NotPower;
                            else if (err.kind() == ErrorKind::NoGeneratingSolution)
                                got = NoGen;
                            else
                                throw;
                        }
                        bool right = false;
                        if (!any[idx]) {
                            right = got == NotPower;
                            tally.no_power += right;
                        } else if (!gen[idx]) {
                            right = got == NoGen;
                            tally.no_generating += right;
                        } else if (got == Solved) {
                            right = verify_simultaneous(inst, out.p, out.q, g).all();
                            if (is_unique) {
                                const std::int64_t p = sol[idx] / sq, q = sol[idx] % sq;
                                right = right && out.branch == SimulBranch::Unique &&
                                        out.p == g.element(p / n, p % n) && out.q == g.element(q / n, q % n);
                            } else {
                                right = right && out.branch == SimulBranch::Coset;
                            }
                            tally.generating += right;
                        }
                        if (!right)
                            ++tally.bad;
                    }
                }
}

template <class Predicate>
SimulInstance<Point> planted_simul(const CurveTorsionGroup &g, const TorsionBasis &basis, Rng &rng,
                                   Predicate &&accept) {
    const mpz_class &order = g.torsion_order();
    for (;;) {
        mpz_class m1 = random_below(order, rng), n1 = random_below(order, rng);
        mpz_class m2 = random_below(order, rng), n2 = random_below(order, rng);
        if (!accept(m1, n1, m2, n2))
            continue;
        Point k1 = g.add(g.mul(m1, basis.p_gen), g.mul(n1, basis.q_gen));
        Point k2 = g.add(g.mul(m2, basis.p_gen), g.mul(n2, basis.q_gen));
        return {std::move(k1), std::move(k2), std::move(m1), std::move(n1), std::move(m2), std::move(n2)};
    }
}

} // namespace

CriterionResult check_simultaneous(const SelftestSizes &sizes, std::uint64_t seed) {
    return timed("7", "simultaneous root extraction", [&]() -> Outcome {
        std::ostringstream detail;
        Rng rng(seed + 7);
        SimulTally unique, coset;
        model_simultaneous(sizes, rng, unique, coset);
        bool ok = unique.bad == 0 && coset.bad == 0 && unique.runs > 0 && coset.runs > 0;
        detail << "(Z/8)^2 unique: " << unique.runs - unique.bad << "/" << unique.runs << " agree; coset: "
               << coset.runs - coset.bad << "/" << coset.runs << " agree (generating " << coset.generating
               << ", no root " << coset.no_power << ", no generating " << coset.no_generating << ", skipped "
               << coset.skipped_degenerate << " all-even tuples); ";

        for (const TorsionContext &ctx : fixture_contexts()) {
            const CurveTorsionGroup g(ctx);
            const unsigned ell = ctx.ell();
            const mpz_class &order = ctx.torsion_order();
            unsigned unique_ok = 0, coset_ok = 0;
            for (unsigned t = 0; t < sizes.simul_curve_instances; ++t) {
                const TorsionBasis basis = find_basis(ctx, rng);
                auto inst = planted_simul(g, basis, rng, [&](auto &m1, auto &n1, auto &m2, auto &n2) {
                    const mpz_class det = mod(m1 * n2 - m2 * n1, order);
                    return !mpz_divisible_ui_p(det.get_mpz_t(), ell);
                });
                const auto sol = solve_simultaneous(inst, g, rng);
                if (sol.branch == SimulBranch::Unique && sol.p == basis.p_gen && sol.q == basis.q_gen)
                    ++unique_ok;
            }
            for (unsigned t = 0; t < sizes.simul_curve_instances; ++t) {
                const TorsionBasis basis = find_basis(ctx, rng);
                auto inst = planted_simul(g, basis, rng, [&](auto &m1, auto &n1, auto &m2, auto &n2) {
                    const mpz_class det = mod(m1 * n2 - m2 * n1, order);
                    if (det == 0 || !mpz_divisible_ui_p(det.get_mpz_t(), ell) || valuation(det, ell, ctx.e()) > 2)
                        return false;
                    return !(mpz_divisible_ui_p(m1.get_mpz_t(), ell) && mpz_divisible_ui_p(n1.get_mpz_t(), ell) &&
                             mpz_divisible_ui_p(m2.get_mpz_t(), ell) && mpz_divisible_ui_p(n2.get_mpz_t(), ell));
                });
                const auto sol = solve_simultaneous(inst, g, rng);
                if (sol.branch == SimulBranch::Coset && verify_simultaneous(inst, sol.p, sol.q, g).all())
                    ++coset_ok;
            }
            const unsigned want = sizes.simul_curve_instances;
            ok = ok && unique_ok == want && coset_ok == want;
            detail << ctx_label(ctx) << ": unique " << unique_ok << "/" << want << ", coset " << coset_ok << "/"
                   << want << "; ";
        }
        return {ok, detail.str()};
    });
}

// ---------------------------------------------------------------------------
// 8. Operation counts against e at l = 2.

CriterionResult check_complexity_scaling(const SelftestSizes &sizes, std::uint64_t seed) {
    return timed("8", "operation-count scaling in e (l = 2)", [&]() -> Outcome {
        std::ostringstream detail;
        std::vector<double> xs, ys;
        double worst_secs = 0.0;
        double last_secs = 0.0;
        for (unsigned e : sizes.scaling_exponents) {
            const TorsionContext ctx = gen_params({2, e, 1000000});
            const CurveTorsionGroup g(ctx);
            Rng rng(seed + e);
            std::uint64_t ops = 0;
            for (unsigned t = 0; t < sizes.scaling_solves; ++t) {
                const TorsionBasis basis = find_basis(ctx, rng);
                const auto inst = planted_grep(g, basis, rng);
                reset_op_counts();
                const auto start = Clock::now();
                const auto sol = solve_grep(inst, g, rng);
                const double secs = std::chrono::duration<double>(Clock::now() - start).count();
                ops += op_counts().fp2_mul + op_counts().fp2_inv;
                last_secs = std::max(last_secs, secs);
                (void)sol;
            }
            worst_secs = last_secs;
            last_secs = 0.0;
            const double mean = static_cast<double>(ops) / sizes.scaling_solves;
            xs.push_back(std::log(static_cast<double>(e)));
            ys.push_back(std::log(mean));
            detail << "e=" << e << " (p=" << ctx.field()->modulus() << "): " << static_cast<std::uint64_t>(mean)
                   << " field ops/solve; ";
        }
        // least-squares slope of log(ops) against log(e)
        const double nx = static_cast<double>(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double slope = (nx * sxy - sx * sy) / (nx * sxx - sx * sx);
        detail << "log-log slope " << slope << ", slowest solve at largest e " << worst_secs << " s";
        return {slope <= 1.3 && worst_secs < 5.0, detail.str()};
    });
}

// ---------------------------------------------------------------------------
// 9. Golden existence table.

std::size_t first_difference_line(const std::string &a, const std::string &b) {
    std::istringstream sa(a), sb(b);
    std::string la, lb;
    std::size_t line = 0;
    for (;;) {
        ++line;
        const bool ga = static_cast<bool>(std::getline(sa, la));
        const bool gb = static_cast<bool>(std::getline(sb, lb));
        if (!ga && !gb)
            return a == b ? 0 : line;
        if (ga != gb || la != lb)
            return line;
    }
}

CriterionResult check_golden_table(const std::string &golden_dir) {
    return timed("9", "golden existence table (2,2)", [&]() -> Outcome {
        const std::string first = existence_table_csv(exhaustive_existence_table(2, 2));
        const std::string second = existence_table_csv(exhaustive_existence_table(2, 2));
        if (first != second)
            return {false, "two runs differ at line " + std::to_string(first_difference_line(first, second))};
        const std::string path = golden_dir + "/existence_2_2.csv";
        std::ifstream in(path, std::ios::binary);
        if (!in)
            return {false, "cannot read " + path};
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::size_t line = first_difference_line(first, buf.str());
        if (line != 0)
            return {false, "differs from " + path + " at line " + std::to_string(line)};
        return {true, "byte-identical to " + path + " (" + std::to_string(first.size()) + " bytes)"};
    });
}

std::vector<CriterionResult> run_selftest(const SelftestOptions &options) {
    const SelftestSizes sizes =
        options.level == SelftestLevel::Full ? SelftestSizes::full() : SelftestSizes::quick();
    std::vector<CriterionResult> results;
    results.push_back(check_existence_exhaustive(sizes, options.seed));
    results.push_back(check_order_exhaustive());
    results.push_back(check_generic_root(sizes, options.seed));
    results.push_back(check_curve_end_to_end(sizes, options.seed));
    results.push_back(check_pairing_properties(sizes, options.seed));
    results.push_back(check_extended_dlog(sizes, options.seed));
    results.push_back(check_simultaneous(sizes, options.seed));
    results.push_back(check_complexity_scaling(sizes, options.seed));
    results.push_back(check_golden_table(options.golden_dir));
    return results;
}

} // namespace grex
