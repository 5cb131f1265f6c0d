#include <doctest.h>

#include "instances.hpp"
#include "lrc/verify.hpp"

using namespace lrc;
using namespace lrc::testing;

TEST_CASE("every constructed code respects every bound") {
    for (const auto& inst : desk_instances()) {
        CAPTURE(inst.name);
        Construction c = inst.build();
        const size_t d = min_distance(c.code);
        for (const auto& b : applicable_bounds(c)) {
            CAPTURE(b.name);
            CHECK(int64_t(d) <= b.value);
        }
        const int64_t claimed = claimed_bound(c, inst.claim);
        CHECK(int64_t(c.claimed_dmin) == claimed);
        if (inst.claim == Claim::BoundOnly) {
            CHECK_FALSE(c.claim_exact);
            CHECK(int64_t(d) <= claimed);
            CHECK(d >= c.locality->delta);
        } else {
            CHECK(c.claim_exact);
            CHECK(int64_t(d) == claimed);
        }
        auto cert = verify_construction(c);
        CHECK_MESSAGE(cert.ok(), cert.to_string());
    }
}

TEST_CASE("rate optimality of the regenerating-local families") {
    for (const auto& inst : desk_instances()) {
        if (inst.claim != Claim::MsrK && inst.claim != Claim::Mbr) continue;
        Construction c = inst.build();
        if (c.family == "stack") continue;
        CAPTURE(inst.name);
        const auto& l = *c.locality;
        const int64_t alpha = int64_t(c.code.alpha()), r = int64_t(l.r), delta = int64_t(l.delta);
        auto calc = inst.claim == Claim::Mbr ? bounds::mbr_profile(alpha, r, delta) : bounds::msr_profile(alpha, r, delta);
        const int64_t d = int64_t(min_distance(c.code));
        CHECK(int64_t(c.code.K()) == bounds::rate_bound(int64_t(c.code.n()), d, calc));
    }
}
