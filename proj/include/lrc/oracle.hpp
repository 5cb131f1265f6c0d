#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lrc/vector_code.hpp"

namespace lrc {

// Guards for the exhaustive subset oracles. LRC_MAX_ORACLE_SUBSETS in the
// environment overrides the rank-check budget; force disables both guards.
struct OracleLimits {
    size_t max_n = 20;
    uint64_t max_subsets = 20'000'000;
    bool force = false;

    static OracleLimits from_env();
    // Makes from_env() return force = true for the rest of the process.
    static void set_process_force(bool force);
};

size_t min_distance(const VectorCode& c, const OracleLimits& lim = OracleLimits::from_env());

// Every set of n-t+1 nodes has rank K, i.e. d_min >= t.
bool distance_at_least(const VectorCode& c, size_t t, const OracleLimits& lim = OracleLimits::from_env());

struct InfoSet {
    size_t kappa = 0;
    std::vector<size_t> nodes;
};
InfoSet quasi_dimension(const VectorCode& c, const OracleLimits& lim = OracleLimits::from_env());

// Smallest information set avoiding the excluded nodes, if one exists.
std::optional<std::vector<size_t>> min_information_set(const VectorCode& c, const std::vector<size_t>& exclude,
                                                       const OracleLimits& lim = OracleLimits::from_env());

struct RankProfile {
    std::vector<int64_t> a;
};
struct NotUra {
    std::vector<size_t> first, second;
    size_t rank_first = 0, rank_second = 0;
};
std::variant<RankProfile, NotUra> ura_profile(const VectorCode& c, const OracleLimits& lim = OracleLimits::from_env());

VectorCode puncture(const VectorCode& c, const std::vector<size_t>& nodes);
VectorCode shorten(const VectorCode& c, const std::vector<size_t>& nodes);

bool is_vector_mds(const VectorCode& c, const OracleLimits& lim = OracleLimits::from_env());

// thick: S lists nodes and the test is rank = |S| * alpha; otherwise S lists
// generator columns and the test is rank = |S|.
bool is_core(const VectorCode& c, const std::vector<size_t>& s, bool thick = true);

struct WitnessStep {
    size_t local = 0;
    size_t s = 0;
    size_t nu = 0;
};
struct WitnessSet {
    std::vector<size_t> T;
    size_t rank = 0;
    size_t bound = 0;  // n - |T| >= d_min
    std::vector<WitnessStep> steps;
    size_t sigma = 0;
    size_t nu_end = 0;
};
WitnessSet find_witness(const VectorCode& c, const LocalityStructure& loc);

struct StructureReport {
    bool locals_ok = false;
    bool disjoint = false;
    bool rank_conditions = false;
    std::vector<std::string> notes;

    bool passed() const { return locals_ok && disjoint && rank_conditions; }
};
StructureReport check_optimal_structure(const VectorCode& c, const LocalityStructure& loc,
                                        const OracleLimits& lim = OracleLimits::from_env());

// Builds and validates a locality structure; kind and exactness are derived.
LocalityStructure make_locality(const VectorCode& c, size_t r, size_t delta, std::vector<std::vector<size_t>> supports,
                                const OracleLimits& lim = OracleLimits::from_env());
std::vector<std::string> locality_violations(const VectorCode& c, const LocalityStructure& loc,
                                             const OracleLimits& lim = OracleLimits::from_env());

}  // namespace lrc
