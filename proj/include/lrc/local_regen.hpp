#pragma once

#include <optional>
#include <string>

#include "lrc/construction.hpp"
#include "lrc/oracle.hpp"

namespace lrc {

struct LocalRegenSpec {
    std::string family;
    size_t r = 0;
    size_t delta = 0;
    size_t m = 0;                // number of local codes
    size_t Delta = 0;            // global parity nodes
    size_t ell = 0;              // K = ell * alpha (MSR) or ell * K_L (MBR)
    std::optional<size_t> d;     // component repair degree; chosen automatically when empty
    size_t n = 0;                // checked against m * n_L when nonzero; required by product_cyclic
    size_t kappa = 0;            // product_cyclic
    Field field;
    uint64_t seed = 1;
    size_t max_attempts = 10;
};

Construction sum_parity_msr(const LocalRegenSpec& s);
Construction pyramid_msr(const LocalRegenSpec& s);
Construction random_msr_info(const LocalRegenSpec& s);
Construction random_msr_all_symbol(const LocalRegenSpec& s);
Construction rbt_mbr_local(const LocalRegenSpec& s);
Construction rbt_mbr_all_symbol(const LocalRegenSpec& s);
Construction product_cyclic(const LocalRegenSpec& s);

// Each scalar coordinate becomes alpha independent copies.
Construction stack(const Construction& base, size_t alpha);

// Dispatch on spec.family; stack is not reachable from here.
Construction construct_local_regen(const LocalRegenSpec& s);

// Every T with |T| = total and |T n S_i| <= per_local for all i has full rank.
bool info_sets_certified(const VectorCode& c, const std::vector<std::vector<size_t>>& supports, size_t per_local,
                         size_t total);
// Every ell-node set of full rank under g0 also has full rank under g.
bool thick_cores_preserved(const VectorCode& c, const VectorCode& c0, size_t ell);

// Component MSR code for (n, k) with repair degree d; pm when d >= 2k-2, trivial when d == k.
RegenCode msr_component(size_t n, size_t k, size_t d, const Field& field, uint64_t seed);

}  // namespace lrc
