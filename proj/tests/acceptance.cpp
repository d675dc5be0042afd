// One PASS/FAIL line per acceptance criterion at full sample sizes.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "grex/selftest.hpp"

int main(int argc, char **argv) {
    grex::SelftestOptions opts;
    opts.level = grex::SelftestLevel::Full;
    opts.golden_dir = GREX_GOLDEN_DIR;
    if (argc > 1)
        opts.seed = std::strtoull(argv[1], nullptr, 10);

    bool ok = true;
    for (const auto &res : grex::run_selftest(opts)) {
        std::printf("%s criterion %s: %s (%s) [%.2fs]\n", res.passed ? "PASS" : "FAIL", res.id.c_str(),
                    res.name.c_str(), res.detail.c_str(), res.seconds);
        ok = ok && res.passed;
    }
    return ok ? 0 : 1;
}
