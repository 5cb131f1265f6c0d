#pragma once

#include <string>
#include <vector>

#include "lrc/construction.hpp"
#include "lrc/oracle.hpp"

namespace lrc {

struct CheckLine {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct Certificate {
    size_t dmin = 0;
    std::vector<CheckLine> checks;

    bool ok() const;
    std::string to_string() const;
};

// Recomputes everything a descriptor claims: oracle d_min against the claim,
// d_min against every applicable bound, locality, optimal structure, local and
// whole-code regenerating contracts, and the certificate of randomized families.
Certificate verify_construction(const Construction& c, const OracleLimits& lim = OracleLimits::from_env());

struct BoundValue {
    std::string name;
    int64_t value = 0;
};
// Every upper bound on d_min that applies to the code and its locality.
std::vector<BoundValue> applicable_bounds(const Construction& c, const OracleLimits& lim = OracleLimits::from_env());

}  // namespace lrc
