#pragma once

#include <string>

#include "grex/json.hpp"

namespace grex {

/// Exit codes: 0 success, 2 no solution / failed verdict, 1 error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoSolution = 2;

struct CommandResult {
    json output;
    int exit_code = kExitOk;
};

/// `form` is "minus" (p = ell^e*f - 1) or "plus"; "plus" is refused.
CommandResult cmd_gen_params(unsigned ell, unsigned e, const mpz_class &f_max, const std::string &form = "minus");
CommandResult cmd_solve(const json &ctx, const json &instance, Rng &rng);
CommandResult cmd_simul(const json &ctx, const json &instance, Rng &rng);
/// Accepts single-equation and simultaneous instances; `solution` needs "P" and "Q".
CommandResult cmd_verify(const json &ctx, const json &instance, const json &solution);
/// `level` is "quick" or "full".
CommandResult cmd_selftest(const std::string &level, const std::string &golden_dir, std::uint64_t seed);

json error_payload(const std::string &kind, const std::string &message);

} // namespace grex
