#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grex {

enum class SelftestLevel { Quick, Full };

struct SelftestOptions {
    SelftestLevel level = SelftestLevel::Full;
    std::string golden_dir;
    std::uint64_t seed = 20240601;
};

struct CriterionResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Sample counts for the randomized criteria; `full()` carries the
/// acceptance sizes, `quick()` a reduced set that finishes in seconds.
struct SelftestSizes {
    std::vector<std::pair<unsigned, unsigned>> existence_shapes;
    unsigned root_trials;
    unsigned curve_instances;
    unsigned pairing_samples;
    unsigned dlog_trials;
    unsigned simul_k_per_tuple;
    unsigned simul_curve_instances;
    std::vector<unsigned> scaling_exponents;
    unsigned scaling_solves;

    static SelftestSizes full();
    static SelftestSizes quick();
};

CriterionResult check_existence_exhaustive(const SelftestSizes &sizes, std::uint64_t seed);
CriterionResult check_order_exhaustive();
CriterionResult check_generic_root(const SelftestSizes &sizes, std::uint64_t seed);
CriterionResult check_curve_end_to_end(const SelftestSizes &sizes, std::uint64_t seed);
CriterionResult check_pairing_properties(const SelftestSizes &sizes, std::uint64_t seed);
CriterionResult check_extended_dlog(const SelftestSizes &sizes, std::uint64_t seed);
CriterionResult check_simultaneous(const SelftestSizes &sizes, std::uint64_t seed);
CriterionResult check_complexity_scaling(const SelftestSizes &sizes, std::uint64_t seed);
CriterionResult check_golden_table(const std::string &golden_dir);

std::vector<CriterionResult> run_selftest(const SelftestOptions &options);

/// First line (1-based) where two texts differ, or 0 when identical.
std::size_t first_difference_line(const std::string &a, const std::string &b);

} // namespace grex
