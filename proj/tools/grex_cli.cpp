#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "grex/commands.hpp"
#include "grex/model.hpp"
#include "grex/selftest.hpp"

using namespace grex;

namespace {

std::string read_text(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Malformed, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json read_json(const std::string &path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error &err) {
        throw Error(ErrorKind::Malformed, path + ": " + err.what());
    }
}

int emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return kExitError;
    }
    out << text;
    return 0;
}

int emit(const CommandResult &res, const std::string &out_path) {
    if (int rc = emit(res.output.dump(2) + "\n", out_path))
        return rc;
    return res.exit_code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Generalized root extraction in l^e-torsion of supersingular curves"};
    app.require_subcommand(1);

    std::string ctx_path, instance_path, solution_path, out_path;
    std::uint64_t seed = 0;
    bool seeded = false;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out", out_path, "Write the result here instead of stdout");
    };
    auto add_seed = [&](CLI::App *cmd) {
        cmd->add_option("--seed", seed, "Seed for reproducible randomized searches")
            ->each([&](const std::string &) { seeded = true; });
    };

    unsigned ell = 2, e = 1;
    std::string f_max = "10000", form = "minus";
    auto *gen = app.add_subcommand("gen-params", "Find p = l^e*f - 1 and emit a context");
    gen->add_option("--l", ell, "Small prime l")->required();
    gen->add_option("--e", e, "Exponent e")->required();
    gen->add_option("--f-max", f_max, "Largest cofactor to try");
    gen->add_option("--form", form, "Prime form: minus (supported) or plus")->check(CLI::IsMember({"minus", "plus"}));
    add_common(gen);

    auto *solve = app.add_subcommand("solve", "Solve K = mP + nQ for generators P, Q");
    solve->add_option("--ctx", ctx_path, "Context JSON")->required();
    solve->add_option("--instance", instance_path, "Instance JSON ('-' for stdin)")->required();
    add_seed(solve);
    add_common(solve);

    auto *simul = app.add_subcommand("simul", "Solve K1 = m1P + n1Q, K2 = m2P + n2Q");
    simul->add_option("--ctx", ctx_path, "Context JSON")->required();
    simul->add_option("--instance", instance_path, "Instance JSON ('-' for stdin)")->required();
    add_seed(simul);
    add_common(simul);

    auto *verify = app.add_subcommand("verify", "Check a solution against an instance");
    verify->add_option("--ctx", ctx_path, "Context JSON")->required();
    verify->add_option("--instance", instance_path, "Instance JSON")->required();
    verify->add_option("--solution", solution_path, "Solution JSON with P and Q ('-' for stdin)")->required();
    add_common(verify);

    std::string level = "quick";
    std::string golden_dir = GREX_GOLDEN_DIR;
    auto *selftest = app.add_subcommand("selftest", "Run the acceptance checks");
    selftest->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    selftest->add_option("--golden-dir", golden_dir, "Directory holding existence_2_2.csv");
    add_seed(selftest);
    add_common(selftest);

    unsigned table_ell = 2, table_e = 2;
    auto *table = app.add_subcommand("table", "Emit the exhaustive existence table as CSV");
    table->add_option("--l", table_ell, "Small prime l")->required();
    table->add_option("--e", table_e, "Exponent e")->required();
    add_common(table);

    CLI11_PARSE(app, argc, argv);

    if (!seeded)
        seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
    Rng rng(seed);

    try {
        if (*gen) {
            mpz_class bound = parse_decimal(f_max);
            return emit(cmd_gen_params(ell, e, bound, form), out_path);
        }
        if (*solve)
            return emit(cmd_solve(read_json(ctx_path), read_json(instance_path), rng), out_path);
        if (*simul)
            return emit(cmd_simul(read_json(ctx_path), read_json(instance_path), rng), out_path);
        if (*verify)
            return emit(cmd_verify(read_json(ctx_path), read_json(instance_path), read_json(solution_path)),
                        out_path);
        if (*selftest) {
            CommandResult res = cmd_selftest(level, golden_dir, seeded ? seed : SelftestOptions{}.seed);
            for (const auto &c : res.output.value("criteria", json::array()))
                std::cerr << (c.at("passed").get<bool>() ? "PASS" : "FAIL") << "  [" << c.at("id").get<std::string>()
                          << "] " << c.at("name").get<std::string>() << ": " << c.at("detail").get<std::string>()
                          << "\n";
            return emit(res, out_path);
        }
        if (*table)
            return emit(existence_table_csv(exhaustive_existence_table(table_ell, table_e)), out_path);
    } catch (const Error &err) {
        std::cout << error_payload(std::string(kind_name(err.kind())), err.what()).dump(2) << "\n";
        return kExitError;
    }
    return kExitError;
}
