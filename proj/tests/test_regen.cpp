#include <doctest.h>

#include "lrc/bounds.hpp"
#include "lrc/oracle.hpp"
#include "lrc/regen.hpp"
#include "lrc/subsets.hpp"

using namespace lrc;

namespace {

template <class Fn>
Errc error_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvalidDescriptor;
}

std::vector<uint32_t> sample_word(const RegenCode& rc, uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    return rc.code.encode(random_vector(rc.code.field(), rc.code.K(), rng));
}

}  // namespace

TEST_CASE("pentagon repair-by-transfer code") {
    auto rc = rbt_mbr_construct(5, 3);
    const auto& p = rc.params;
    CHECK(p.alpha == 4);
    CHECK(p.beta == 1);
    CHECK(p.B == 9);
    CHECK(p.point == RegenPoint::MBR);
    CHECK(int64_t(p.B) == bounds::cutset_bound(3, 4, 4, 1));
    CHECK(rc.code.field().order() == 11);

    auto rep = check_regen_contracts(rc);
    CHECK(rep.ok);
    CHECK(rep.collections == 10);

    auto word = sample_word(rc);
    for (size_t f = 0; f < 5; ++f) {
        auto t = rbt_repair(rc, f, word);
        CHECK(t.success);
        CHECK(t.total == 4);
        CHECK(t.by_transfer);
        std::vector<size_t> sorted = t.helpers;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == complement(5, {f}));
        // every recovered symbol is a verbatim copy of a helper's stored symbol
        for (size_t pos = 0; pos < 4; ++pos) {
            auto h = rc.code.node_content(word, t.helpers[pos]);
            CHECK(std::find(h.begin(), h.end(), t.recovered[pos]) != h.end());
        }
        auto again = rbt_repair(rc, f, word);
        CHECK(again.helpers == t.helpers);
        CHECK(again.recovered == t.recovered);
    }

    CHECK(min_distance(rc.code) == 3);
    CHECK(quasi_dimension(rc.code).kappa == 3);
    auto prof = ura_profile(rc.code);
    REQUIRE(std::holds_alternative<RankProfile>(prof));
    CHECK(std::get<RankProfile>(prof).a == std::vector<int64_t>{4, 3, 2, 0, 0});
    CHECK_FALSE(is_vector_mds(rc.code));
    auto msg = data_collect(rc, {0, 1, 2}, word);
    CHECK(msg.size() == 9);
}

TEST_CASE("small repair-by-transfer codes") {
    auto tri = rbt_mbr_construct(3, 2);
    CHECK(tri.params.alpha == 2);
    CHECK(tri.params.B == 3);
    CHECK(check_regen_contracts(tri).ok);
    auto t = rbt_repair(tri, 1, sample_word(tri));
    CHECK(t.total == 2);
    CHECK(t.success);

    auto two = rbt_mbr_construct(2, 1);
    CHECK(two.params.alpha == 1);
    CHECK(two.params.B == 1);
    CHECK(check_regen_contracts(two).ok);

    CHECK(error_of([] { rbt_mbr_construct(5, 3, Field::make(7)); }) == Errc::FieldTooSmall);
}

TEST_CASE("product-matrix MSR") {
    auto a = pm_msr_construct(5, 2, 3, Field::make(7));
    CHECK(a.params.alpha == 2);
    CHECK(a.params.beta == 1);
    CHECK(a.params.B == 4);
    CHECK(a.params.point == RegenPoint::MSR);
    auto rep = check_regen_contracts(a);
    CHECK(rep.ok);
    CHECK(rep.collections == 10);
    CHECK(rep.repairs == 20);
    auto word = sample_word(a);
    for (size_t f = 0; f < 5; ++f) {
        auto others = complement(5, {f});
        for_each_subset(4, 3, [&](const std::vector<size_t>& pos) {
            auto t = regen_repair(a, f, pick(others, pos), word);
            CHECK(t.total == 3);
            CHECK(t.success);
            return false;
        });
    }
    CHECK(is_vector_mds(a.code));
    CHECK(quasi_dimension(a.code).kappa == 2);
    CHECK(min_distance(a.code) == 4);

    auto b = pm_msr_construct(5, 3, 4, Field::make(11));
    CHECK(b.params.alpha == 2);
    CHECK(b.params.B == 6);
    auto rb = check_regen_contracts(b);
    CHECK(rb.ok);
    CHECK(rb.collections == 10);
    CHECK(is_vector_mds(b.code));

    CHECK(error_of([] { pm_msr_construct(4, 3, 2, Field::make(7)); }) == Errc::InfeasibleParams);
    CHECK(error_of([] { pm_msr_construct(8, 2, 7, Field::make(7)); }) == Errc::FieldTooSmall);
    // no product-matrix encoding of (6, 3, 4) exists over GF(7)
    CHECK(error_of([] { pm_msr_construct(6, 3, 4, Field::make(7)); }) == Errc::FieldTooSmall);

    // same seed, same code
    CHECK(pm_msr_construct(5, 2, 3, Field::make(7)).code == a.code);
}

TEST_CASE("shortened product-matrix MSR keeps the contracts") {
    auto big = pm_msr_construct(5, 3, 4, Field::make(11));
    // shorten one node: (4, 2, 3)
    RegenCode small;
    small.code = shorten(big.code, {1, 2, 3, 4});
    small.params = make_regen_params(4, 2, 3, 2, 1, 4);
    small.projections.assign(4, std::vector<Matrix>(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (i != j) small.projections[i][j] = big.projections[i + 1][j + 1];
    auto rep = check_regen_contracts(small);
    CHECK(rep.ok);
    CHECK(rep.collections == 6);
}

TEST_CASE("trivial MSR") {
    auto a = trivial_msr(4, 2, Field::make(5));
    CHECK(a.params.d == 2);
    CHECK(a.params.alpha == 1);
    CHECK(a.params.point == RegenPoint::MSR);
    CHECK(min_distance(a.code) == 3);
    CHECK(check_regen_contracts(a).ok);
    auto t = regen_repair(a, 0, {1, 3}, sample_word(a));
    CHECK(t.total == 2);

    auto b = trivial_msr(7, 4, Field::make(11));
    CHECK(min_distance(b.code) == 4);
    CHECK(error_of([] { trivial_msr(5, 5, Field::make(7)); }) == Errc::InfeasibleParams);
}

TEST_CASE("contract preconditions") {
    auto rc = rbt_mbr_construct(5, 3);
    auto word = sample_word(rc);
    CHECK(error_of([&] { data_collect(rc, {0, 1}, word); }) == Errc::PreconditionViolated);
    CHECK(error_of([&] { regen_repair(rc, 0, {0, 1, 2, 3}, word); }) == Errc::PreconditionViolated);
    CHECK(error_of([&] { regen_repair(rc, 0, {1, 2, 3}, word); }) == Errc::PreconditionViolated);
    auto t = regen_repair(rc, 0, {1, 2, 3, 4}, word);
    CHECK(t.total == 4);
    CHECK(t.success);
}

TEST_CASE("regenerating codes meet the erasure bound") {
    std::vector<RegenCode> codes{rbt_mbr_construct(5, 3), rbt_mbr_construct(4, 2), rbt_mbr_construct(4, 3),
                                 pm_msr_construct(5, 2, 3, Field::make(7)), pm_msr_construct(6, 3, 4, Field::make(11)),
                                 trivial_msr(6, 3, Field::make(7))};
    for (const auto& rc : codes) {
        const auto& p = rc.params;
        size_t d = min_distance(rc.code);
        CHECK(d >= p.n - p.k + 1);
        CHECK(quasi_dimension(rc.code).kappa == p.k);
        if (p.point == RegenPoint::MSR) {
            CHECK(p.B == p.k * p.alpha);
            CHECK(d == p.n - bounds::ceil_div(int64_t(rc.code.K()), int64_t(p.alpha)) + 1);
        }
        if (p.point == RegenPoint::MBR)
            CHECK(int64_t(p.B) == bounds::cutset_bound(int64_t(p.k), int64_t(p.d), int64_t(p.alpha), 1));
        CHECK(d == p.n - p.k + 1);
    }
}

TEST_CASE("punctured regenerating code") {
    auto rc = pm_msr_construct(6, 3, 4, Field::make(11));
    CHECK(check_regen_contracts(rc).ok);
    for_each_subset(6, 5, [&](const std::vector<size_t>& s) {
        auto sub = restrict_regen(rc, s);
        CHECK(sub.params.B == rc.params.B);
        CHECK(sub.params.point == RegenPoint::MSR);
        CHECK(check_regen_contracts(sub).ok);
        return false;
    });
    CHECK(error_of([&] { restrict_regen(rc, {0, 1, 2, 3}); }) == Errc::PreconditionViolated);
}
