#include "grex/commands.hpp"

#include "grex/curve_group.hpp"
#include "grex/error.hpp"
#include "grex/params.hpp"
#include "grex/selftest.hpp"

namespace grex {

json error_payload(const std::string &kind, const std::string &message) {
    return json{{"status", "error"}, {"kind", kind}, {"message", message}};
}

namespace {

template <class Fn>
CommandResult guarded(Fn &&fn) {
    try {
        return fn();
    } catch (const Error &err) {
        return {error_payload(std::string(kind_name(err.kind())), err.what()), kExitError};
    } catch (const json::exception &err) {
        return {error_payload("malformed", err.what()), kExitError};
    }
}

json checks_json(const GrepChecks &checks) {
    return json{{"membership", checks.membership},
                {"equation", checks.equation},
                {"independence", checks.independence}};
}

} // namespace

CommandResult cmd_gen_params(unsigned ell, unsigned e, const mpz_class &f_max, const std::string &form) {
    return guarded([&]() -> CommandResult {
        if (form == "plus")
            fail(ErrorKind::UnsupportedForm, "only primes of the form ell^e*f - 1 are supported");
        if (form != "minus")
            fail(ErrorKind::Malformed, "form must be 'minus' or 'plus'");
        return {to_json(gen_params({ell, e, f_max})), kExitOk};
    });
}

CommandResult cmd_solve(const json &ctx_json, const json &instance, Rng &rng) {
    return guarded([&]() -> CommandResult {
        const CurveTorsionGroup group(context_from_json(ctx_json));
        const auto inst = grep_instance_from_json(instance, group.context());
        const Existence ex = existence_check(inst, group);
        if (!ex.solvable)
            return {json{{"status", "no_solution"}, {"u", ex.u}, {"r", ex.r}}, kExitNoSolution};
        const auto sol = solve_grep(inst, group, rng);
        return {json{{"status", "ok"},
                     {"P", to_json(sol.p)},
                     {"Q", to_json(sol.q)},
                     {"case", sol.algorithm_case},
                     {"u", sol.u},
                     {"r", sol.r}},
                kExitOk};
    });
}

CommandResult cmd_simul(const json &ctx_json, const json &instance, Rng &rng) {
    return guarded([&]() -> CommandResult {
        const CurveTorsionGroup group(context_from_json(ctx_json));
        const auto inst = simul_instance_from_json(instance, group.context());
        try {
            const auto sol = solve_simultaneous(inst, group, rng);
            return {json{{"status", "ok"},
                         {"P", to_json(sol.p)},
                         {"Q", to_json(sol.q)},
                         {"branch", sol.branch == SimulBranch::Unique ? "unique" : "coset"},
                         {"r", sol.r}},
                    kExitOk};
        } catch (const Error &err) {
            if (err.kind() != ErrorKind::NotAPower && err.kind() != ErrorKind::NoGeneratingSolution)
                throw;
            return {json{{"status", "no_solution"}, {"reason", std::string(kind_name(err.kind()))}},
                    kExitNoSolution};
        }
    });
}

CommandResult cmd_verify(const json &ctx_json, const json &instance, const json &solution) {
    return guarded([&]() -> CommandResult {
        const CurveTorsionGroup group(context_from_json(ctx_json));
        const FieldRef &field = group.context().field();
        const Point p = raw_point_from_json(solution.at("P"), field);
        const Point q = raw_point_from_json(solution.at("Q"), field);
        GrepChecks checks;
        if (instance.contains("K1")) {
            SimulInstance<Point> inst{raw_point_from_json(instance.at("K1"), field),
                                      raw_point_from_json(instance.at("K2"), field),
                                      integer_from_json(instance.at("m1")),
                                      integer_from_json(instance.at("n1")),
                                      integer_from_json(instance.at("m2")),
                                      integer_from_json(instance.at("n2"))};
            checks = verify_simultaneous(inst, p, q, group);
        } else {
            GrepInstance<Point> inst{raw_point_from_json(instance.at("K"), field), integer_from_json(instance.at("m")),
                                     integer_from_json(instance.at("n"))};
            checks = verify_grep(inst, p, q, group);
        }
        const bool ok = checks.all();
        return {json{{"status", ok ? "valid" : "invalid"}, {"checks", checks_json(checks)}},
                ok ? kExitOk : kExitNoSolution};
    });
}

CommandResult cmd_selftest(const std::string &level, const std::string &golden_dir, std::uint64_t seed) {
    return guarded([&]() -> CommandResult {
        SelftestOptions options;
        if (level == "quick")
            options.level = SelftestLevel::Quick;
        else if (level == "full")
            options.level = SelftestLevel::Full;
        else
            fail(ErrorKind::Malformed, "selftest level must be 'quick' or 'full'");
        options.golden_dir = golden_dir;
        options.seed = seed;

        json report = json::array();
        bool all = true;
        for (const CriterionResult &res : run_selftest(options)) {
            all = all && res.passed;
            report.push_back(json{{"id", res.id},
                                  {"name", res.name},
                                  {"passed", res.passed},
                                  {"detail", res.detail},
                                  {"seconds", res.seconds}});
        }
        return {json{{"status", all ? "pass" : "fail"}, {"level", level}, {"criteria", report}},
                all ? kExitOk : kExitError};
    });
}

} // namespace grex
