#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrc/regen.hpp"
#include "lrc/vector_code.hpp"

namespace lrc {

// A constructed code together with everything needed to re-verify it.
struct Construction {
    std::string family;
    VectorCode code;
    std::optional<LocalityStructure> locality;
    size_t claimed_dmin = 0;
    // false: claimed_dmin is only an upper bound, the family guarantees d_min >= delta
    bool claim_exact = true;
    // construction inputs, in a stable order
    std::vector<std::pair<std::string, int64_t>> params;
    uint64_t seed = 0;
    size_t attempts = 1;
    std::string provider;
    // whole-code regenerating structure (plain RBT / MSR codes)
    std::optional<RegenCode> regen;
    // per-support regenerating structure, indices local to the support
    std::vector<std::optional<RegenCode>> local_regen;

    int64_t param(const std::string& key, int64_t fallback = -1) const;
};

}  // namespace lrc
