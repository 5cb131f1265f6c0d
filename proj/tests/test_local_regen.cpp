#include <doctest.h>

#include "lrc/bounds.hpp"
#include "lrc/local_regen.hpp"
#include "lrc/rs.hpp"
#include "lrc/scalar_locality.hpp"
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

LocalRegenSpec spec(std::string family, size_t r, size_t delta, size_t m, size_t Delta, Field f) {
    LocalRegenSpec s;
    s.family = std::move(family);
    s.r = r;
    s.delta = delta;
    s.m = m;
    s.Delta = Delta;
    s.field = f;
    return s;
}

void check_locals(const Construction& c) {
    REQUIRE(c.local_regen.size() == c.locality->supports.size());
    for (const auto& rc : c.local_regen) {
        REQUIRE(rc);
        auto rep = check_regen_contracts(*rc);
        CHECK_MESSAGE(rep.ok, rep.failure);
    }
}

}  // namespace

TEST_CASE("sum-parity MSR-local code") {
    auto c = sum_parity_msr(spec("sum_parity_msr", 2, 3, 2, 1, Field::make(7)));
    CHECK(c.code.n() == 9);
    CHECK(c.code.K() == 8);
    CHECK(c.code.alpha() == 2);
    CHECK(c.provider == "pm");
    CHECK(c.claimed_dmin == 4);
    CHECK(min_distance(c.code) == 4);
    CHECK(c.locality->exact);
    check_locals(c);
    for (const auto& rc : c.local_regen) {
        CHECK(rc->params.point == RegenPoint::MSR);
        CHECK(rc->params.d == 3);
        CHECK(rc->params.beta == 1);
    }
    auto rep = check_optimal_structure(c.code, *c.locality);
    CHECK(rep.passed());
}

TEST_CASE("sum-parity degenerate cases") {
    Field f7 = Field::make(7);
    auto one = sum_parity_msr(spec("sum_parity_msr", 2, 3, 1, 1, f7));
    CHECK(one.code.generator() == pm_msr_construct(5, 2, 3, f7).code.generator());

    auto none = sum_parity_msr(spec("sum_parity_msr", 2, 3, 2, 0, f7));
    CHECK(none.code.n() == 8);
    CHECK(min_distance(none.code) == 3);

    // delta < Delta: only the bound and the local distance are guaranteed
    auto wide = sum_parity_msr(spec("sum_parity_msr", 2, 3, 2, 4, Field::make(2, 4)));
    CHECK_FALSE(wide.claim_exact);
    const size_t d = min_distance(wide.code);
    CHECK(d >= 3);
    CHECK(d <= wide.claimed_dmin);
    // two local codes of weight delta already give 2 delta < delta + Delta
    CHECK(d == 6);
    CHECK(wide.claimed_dmin == 7);

    auto bad = spec("sum_parity_msr", 2, 3, 2, 1, f7);
    bad.d = 4;
    CHECK(error_of([&] { sum_parity_msr(bad); }) == Errc::InfeasibleComponent);
}

TEST_CASE("pyramid-like MSR-local code") {
    auto c = pyramid_msr(spec("pyramid_msr", 2, 4, 2, 1, Field::make(11)));
    CHECK(c.code.n() == 11);
    CHECK(c.code.K() == 12);
    CHECK(c.code.alpha() == 3);
    CHECK(c.claimed_dmin == 5);
    CHECK(min_distance(c.code) == 5);
    check_locals(c);
    for (const auto& rc : c.local_regen) {
        CHECK(rc->params.n == 5);
        CHECK(rc->params.d == 4);
        CHECK(rc->params.point == RegenPoint::MSR);
    }
}

TEST_CASE("pyramid-like MSR with a trivial parent is the scalar pyramid code") {
    Field f = Field::make(13);
    auto c = pyramid_msr(spec("pyramid_msr", 2, 3, 2, 1, f));
    CHECK(c.provider == "trivial");
    CHECK(c.code.alpha() == 1);
    auto scalar = pyramid_construct(4, 2, 3, 4, f);
    CHECK(c.code.generator() == scalar.code.generator());

    auto none = pyramid_msr(spec("pyramid_msr", 2, 4, 2, 0, Field::make(11)));
    CHECK(min_distance(none.code) == 4);
}

TEST_CASE("random MSR-local code with information locality") {
    Field f = Field::make(257);
    auto c = random_msr_info(spec("random_msr_info", 2, 3, 2, 1, f));
    CHECK(c.code.n() == 9);
    CHECK(c.code.K() == 8);
    CHECK(min_distance(c.code) == 4);
    CHECK(c.attempts <= 10);
    CHECK(info_sets_certified(c.code, c.locality->supports, 2, 4));
    check_locals(c);

    // r = 3, delta = 3: the pyramid-like construction has no product-matrix parent
    auto wide = spec("random_msr_info", 3, 3, 2, 1, f);
    auto pyr = spec("pyramid_msr", 3, 3, 2, 1, f);
    pyr.d = 7;
    CHECK(error_of([&] { pyramid_msr(pyr); }) == Errc::InfeasibleComponent);
    CHECK(pyramid_msr(spec("pyramid_msr", 3, 3, 2, 1, f)).provider == "trivial");
    auto w = random_msr_info(wide);
    CHECK(w.code.n() == 11);
    CHECK(w.code.alpha() == 2);
    CHECK(min_distance(w.code) == w.claimed_dmin);
    CHECK(w.claimed_dmin == 4);

    auto zero = random_msr_info(spec("random_msr_info", 2, 3, 2, 0, f));
    CHECK(min_distance(zero.code) == 3);
}

TEST_CASE("random MSR-local code with all-symbol locality") {
    Field f = Field::make(257);
    auto s = spec("random_msr_allsym", 2, 2, 3, 0, f);
    s.ell = 4;
    auto c = random_msr_all_symbol(s);
    CHECK(c.code.n() == 9);
    CHECK(c.code.K() == 4);
    CHECK(c.claimed_dmin == 5);
    CHECK(min_distance(c.code) == 5);
    CHECK(c.locality->kind == LocalityKind::AllSymbol);

    auto v = spec("random_msr_allsym", 2, 3, 2, 0, f);
    v.ell = 3;
    auto cv = random_msr_all_symbol(v);
    CHECK(cv.code.alpha() == 2);
    CHECK(cv.code.K() == 6);
    CHECK(min_distance(cv.code) == 4);
    check_locals(cv);

    auto full = spec("random_msr_allsym", 2, 3, 2, 0, f);
    full.ell = 4;
    auto cf = random_msr_all_symbol(full);
    CHECK(min_distance(cf.code) == 3);

    auto small = s;
    small.ell = 1;
    CHECK(error_of([&] { random_msr_all_symbol(small); }) == Errc::PreconditionViolated);
}

TEST_CASE("repair-by-transfer MBR-local code with information locality") {
    auto c = rbt_mbr_local(spec("rbt_mbr_info", 2, 2, 2, 1, Field::make(2, 4)));
    CHECK(c.code.n() == 7);
    CHECK(c.code.K() == 6);
    CHECK(c.claimed_dmin == 3);
    CHECK(min_distance(c.code) == 3);
    check_locals(c);
    std::mt19937_64 rng(3);
    for (size_t i = 0; i < 2; ++i) {
        const auto& rc = *c.local_regen[i];
        auto word = rc.code.encode(random_vector(rc.code.field(), rc.code.K(), rng));
        for (size_t v = 0; v < 3; ++v) {
            auto t = rbt_repair(rc, v, word);
            CHECK(t.success);
            CHECK(t.total == 2);
        }
    }
    auto none = rbt_mbr_local(spec("rbt_mbr_info", 2, 2, 2, 0, Field::make(2, 4)));
    CHECK(min_distance(none.code) == 2);
}

TEST_CASE("pentagon locals") {
    auto c = rbt_mbr_local(spec("rbt_mbr_info", 3, 3, 2, 1, Field::make(23)));
    CHECK(c.code.n() == 11);
    CHECK(c.code.K() == 18);
    CHECK(c.param("K_L") == 9);
    CHECK(c.claimed_dmin == 4);
    CHECK(min_distance(c.code) == 4);
    check_locals(c);
}

TEST_CASE("repair-by-transfer MBR-local code with all-symbol locality") {
    auto s = spec("rbt_mbr_allsym", 2, 2, 3, 0, Field::make(11));
    s.ell = 2;
    auto c = rbt_mbr_all_symbol(s);
    CHECK(c.code.n() == 9);
    CHECK(c.code.K() == 6);
    CHECK(c.claimed_dmin == 5);
    CHECK(min_distance(c.code) == 5);
    CHECK(c.claimed_dmin == size_t(bounds::ura_bound(9, 6, bounds::mbr_profile(2, 2, 2))));
    check_locals(c);

    auto all = s;
    all.ell = 3;
    CHECK(min_distance(rbt_mbr_all_symbol(all).code) == 2);

    auto wrong = s;
    wrong.n = 10;
    CHECK(error_of([&] { rbt_mbr_all_symbol(wrong); }) == Errc::PreconditionViolated);
    auto tiny = s;
    tiny.field = Field::make(7);
    CHECK(error_of([&] { rbt_mbr_all_symbol(tiny); }) == Errc::StageOneFailed);
}

TEST_CASE("stacking") {
    Field f11 = Field::make(11);
    auto base = pyramid_construct(4, 2, 3, 4, f11);
    auto s = stack(base, 3);
    CHECK(s.code.n() == 9);
    CHECK(s.code.K() == 12);
    CHECK(s.code.alpha() == 3);
    CHECK(min_distance(s.code) == 4);
    CHECK(quasi_dimension(s.code).kappa == 4);
    CHECK(stack(base, 1).code == base.code);

    auto split = stack(parity_split_construct(4, 2, 3, f11), 2);
    CHECK(min_distance(split.code) == 3);
}

TEST_CASE("product code with cyclic shifts") {
    LocalRegenSpec s;
    s.family = "product_cyclic";
    s.r = 2;
    s.delta = 2;
    s.n = 6;
    s.kappa = 4;
    s.field = Field::make(7);
    auto c = product_cyclic(s);
    CHECK(c.code.alpha() == 3);
    CHECK(c.param("k_prime") == 5);
    CHECK(c.claimed_dmin == 2);
    CHECK(min_distance(c.code) == 2);
    CHECK(quasi_dimension(c.code).kappa == 4);
    CHECK(c.locality->kind == LocalityKind::AllSymbol);

    LocalRegenSpec t = s;
    t.r = 4;
    t.delta = 3;
    t.n = 12;
    t.kappa = 7;
    t.field = Field::make(13);
    auto c2 = product_cyclic(t);
    CHECK(c2.param("k_prime") == 9);
    CHECK(c2.code.K() == 36);
    CHECK(min_distance(c2.code) == 4);
    // K-bound 5 exceeds the kappa-bound value 4 at kappa = 7
    CHECK(bounds::msr_k_bound(12, 36, 6, 4, 3) == 5);
    // the oracle finds 6 nodes spanning the code (4 from one partition, 2
    // from the other), so the true quasi-dimension is 6, not 7
    auto q = quasi_dimension(c2.code);
    CHECK(q.kappa == 6);
    CHECK(bounds::structural_bounds(12, 4, 3, 36, 6, 6, 6).kappa == 5);

    LocalRegenSpec bad = s;
    bad.n = 7;
    CHECK(error_of([&] { product_cyclic(bad); }) == Errc::DivisibilityViolation);
    bad.n = 3;
    bad.kappa = 3;
    CHECK(error_of([&] { product_cyclic(bad); }) == Errc::PreconditionViolated);
}
