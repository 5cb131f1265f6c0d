#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "lrc/oracle.hpp"
#include "lrc/rs.hpp"
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

// All codewords of a small code, by enumerating every message.
std::vector<std::vector<uint32_t>> all_codewords(const VectorCode& c) {
    const uint64_t q = c.field().order();
    uint64_t total = 1;
    for (size_t i = 0; i < c.K(); ++i) total *= q;
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> m(c.K(), 0);
    for (uint64_t x = 0; x < total; ++x) {
        uint64_t t = x;
        for (size_t i = 0; i < c.K(); ++i) {
            m[i] = uint32_t(t % q);
            t /= q;
        }
        out.push_back(c.encode(m));
    }
    return out;
}

size_t node_weight(const VectorCode& c, const std::vector<uint32_t>& w) {
    size_t wt = 0;
    for (size_t i = 0; i < c.n(); ++i)
        for (size_t a = 0; a < c.alpha(); ++a)
            if (w[i * c.alpha() + a]) {
                ++wt;
                break;
            }
    return wt;
}

size_t brute_distance(const VectorCode& c) {
    size_t best = c.n();
    for (const auto& w : all_codewords(c)) {
        size_t wt = node_weight(c, w);
        if (wt) best = std::min(best, wt);
    }
    return best;
}

std::vector<uint32_t> restrict_word(const VectorCode& c, const std::vector<uint32_t>& w, const std::vector<size_t>& s) {
    std::vector<uint32_t> out;
    for (size_t v : s)
        for (size_t a = 0; a < c.alpha(); ++a) out.push_back(w[v * c.alpha() + a]);
    return out;
}

VectorCode random_code(const Field& f, size_t K, size_t n, size_t alpha, std::mt19937_64& rng) {
    while (true) {
        Matrix g(f, K, n * alpha);
        for (size_t i = 0; i < K; ++i)
            for (size_t j = 0; j < n * alpha; ++j) g(i, j) = uint32_t(rng() % f.order());
        try {
            return VectorCode(g, alpha, "random", false);
        } catch (const Error&) {
        }
    }
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    return a.rank() == b.rank() && vstack({a, b}).rank() == a.rank();
}

}  // namespace

TEST_CASE("vector code invariants") {
    Field f7 = Field::make(7);
    CHECK(error_of([&] { VectorCode(Matrix::from_rows(f7, {{1, 2, 3}, {2, 4, 6}}), 1); }) == Errc::RankDeficient);
    CHECK(error_of([&] { VectorCode(Matrix::from_rows(f7, {{1, 2, 3}}), 2); }) == Errc::ShapeMismatch);
    CHECK(error_of([&] { VectorCode(Matrix::from_rows(f7, {{1, 2, 0, 1}, {2, 4, 1, 0}}), 2); }) ==
          Errc::DependentThickColumns);
    VectorCode loose(Matrix::from_rows(f7, {{1, 2, 0, 1}, {2, 4, 1, 0}}), 2, "", false);
    CHECK_FALSE(loose.thick_columns_independent());
}

TEST_CASE("minimum distance oracle") {
    Field f7 = Field::make(7);
    VectorCode rs(rs_generator(f7, 5, 3), 1);
    CHECK(min_distance(rs) == 3);
    VectorCode rep(Matrix::from_rows(f7, {{1, 1, 1, 1, 1, 1}}), 1);
    CHECK(min_distance(rep) == 6);
    CHECK(distance_at_least(rs, 3));
    CHECK_FALSE(distance_at_least(rs, 4));

    std::mt19937_64 rng(5);
    for (auto [q, K, n, alpha] : std::vector<std::tuple<uint32_t, size_t, size_t, size_t>>{
             {2, 3, 6, 1}, {3, 3, 5, 1}, {2, 4, 4, 2}, {3, 4, 4, 2}, {5, 3, 5, 1}, {2, 5, 3, 3}}) {
        Field f = Field::make(q);
        for (int t = 0; t < 15; ++t) {
            auto c = random_code(f, K, n, alpha, rng);
            CHECK(min_distance(c) == brute_distance(c));
        }
    }
}

TEST_CASE("oracle size guard") {
    Field f23 = Field::make(23);
    VectorCode big(rs_generator(f23, 21, 20), 1);
    CHECK(error_of([&] { min_distance(big); }) == Errc::TooLarge);
    OracleLimits lim;
    lim.force = true;
    CHECK(min_distance(big, lim) == 2);
    OracleLimits tiny;
    tiny.max_subsets = 3;
    Field f7 = Field::make(7);
    VectorCode rs(rs_generator(f7, 6, 2), 1);
    CHECK(error_of([&] { min_distance(rs, tiny); }) == Errc::TooLarge);
}

TEST_CASE("quasi-dimension and information sets") {
    Field f7 = Field::make(7);
    VectorCode rs(rs_generator(f7, 6, 4), 1);
    CHECK(quasi_dimension(rs).kappa == 4);
    VectorCode stacked(expand_columns(rs_generator(f7, 5, 3), 2), 2);
    auto info = quasi_dimension(stacked);
    CHECK(info.kappa == 3);
    CHECK(stacked.rank_of(info.nodes) == stacked.K());
    auto ex = min_information_set(stacked, {0, 1});
    REQUIRE(ex);
    CHECK(ex->size() == 3);
    CHECK(std::find(ex->begin(), ex->end(), 0) == ex->end());
    CHECK_FALSE(min_information_set(stacked, {0, 1, 2}).has_value());
}

TEST_CASE("rank profiles") {
    Field f7 = Field::make(7);
    VectorCode stacked(expand_columns(rs_generator(f7, 5, 3), 2), 2);
    auto p = ura_profile(stacked);
    REQUIRE(std::holds_alternative<RankProfile>(p));
    CHECK(std::get<RankProfile>(p).a == std::vector<int64_t>{2, 2, 2, 0, 0});

    VectorCode odd(Matrix::from_rows(f7, {{1, 1, 0}, {0, 0, 1}}), 1);
    auto q = ura_profile(odd);
    REQUIRE(std::holds_alternative<NotUra>(q));
    auto w = std::get<NotUra>(q);
    CHECK(w.first.size() == w.second.size());
    CHECK(odd.rank_of(w.first) == w.rank_first);
    CHECK(odd.rank_of(w.second) == w.rank_second);
    CHECK(w.rank_first != w.rank_second);
}

TEST_CASE("puncture and shorten") {
    Field f7 = Field::make(7);
    VectorCode rs(rs_generator(f7, 5, 3), 1);
    CHECK(puncture(rs, iota(5)) == rs);
    CHECK(shorten(rs, iota(5)) == rs);
    CHECK(error_of([&] { puncture(rs, {}); }) == Errc::EmptySupport);
    CHECK(error_of([&] { shorten(rs, {0, 1}); }) == Errc::EmptyShortening);

    VectorCode stacked(expand_columns(rs_generator(f7, 5, 3), 2), 2);
    auto sh = shorten(stacked, {0, 1, 2, 3});
    CHECK(sh.K() == 4);
    CHECK(quasi_dimension(sh).kappa == 2);
    CHECK(min_distance(sh) == 3);
    CHECK(is_vector_mds(sh));

    auto pu = puncture(stacked, {0, 1, 2});
    CHECK(pu.K() == 6);

    // compare with direct enumeration and check the two orders agree
    std::mt19937_64 rng(17);
    for (auto [q, K, n, alpha] : std::vector<std::tuple<uint32_t, size_t, size_t, size_t>>{
             {2, 4, 6, 1}, {3, 4, 6, 1}, {2, 5, 4, 2}, {5, 4, 5, 1}}) {
        Field f = Field::make(q);
        for (int t = 0; t < 10; ++t) {
            auto c = random_code(f, K, n, alpha, rng);
            std::vector<size_t> S{0, 1, 2}, Z{3}, P;
            for (size_t i = 4; i < n; ++i) P.push_back(i);

            std::set<std::vector<uint32_t>> expect, punct;
            for (const auto& w : all_codewords(c)) {
                punct.insert(restrict_word(c, w, S));
                auto z = restrict_word(c, w, Z);
                if (std::all_of(z.begin(), z.end(), [](uint32_t x) { return x == 0; }))
                    expect.insert(restrict_word(c, w, S));
            }
            CHECK(puncture(c, S).K() == size_t(std::llround(std::log(double(punct.size())) / std::log(double(q)))));
            if (expect.size() == 1) {
                CHECK(error_of([&] { shorten(puncture(c, {0, 1, 2, 3}), S); }) == Errc::EmptyShortening);
                continue;
            }
            std::vector<size_t> SP = S;
            SP.insert(SP.end(), P.begin(), P.end());
            auto a = shorten(puncture(c, {0, 1, 2, 3}), S);
            auto b = puncture(shorten(c, SP), {0, 1, 2});
            CHECK(same_row_space(a.generator(), b.generator()));
            std::set<std::vector<uint32_t>> got;
            for (const auto& w : all_codewords(a)) got.insert(w);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("vector MDS check") {
    Field f7 = Field::make(7);
    CHECK(is_vector_mds(VectorCode(expand_columns(rs_generator(f7, 5, 3), 2), 2)));
    CHECK(is_vector_mds(VectorCode(rs_generator(f7, 6, 2), 1)));
    Field f5 = Field::make(5);
    CHECK_FALSE(is_vector_mds(VectorCode(Matrix::from_rows(f5, {{1, 0, 1, 0}, {0, 1, 1, 1}}), 1)));
    // K not a multiple of alpha
    CHECK_FALSE(is_vector_mds(VectorCode(Matrix::from_rows(f5, {{1, 0, 1, 1}}), 2, "", false)));
}

TEST_CASE("cores") {
    Field f7 = Field::make(7);
    VectorCode sys(rs_systematic(f7, 6, 3), 1);
    CHECK(is_core(sys, {0, 1, 2}, false));
    CHECK(is_core(sys, {0, 4}, false));
    VectorCode spc(Matrix::from_rows(f7, {{1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 6}, {0, 0, 0, 0, 1, 6}}), 1);
    CHECK_FALSE(is_core(spc, {0, 1, 2}, false));
    CHECK(is_core(spc, {0, 1, 3}, false));

    // k-core of C-dual <=> independent columns, checked against explicit dual codewords
    std::mt19937_64 rng(23);
    for (uint32_t q : {2u, 3u}) {
        Field f = Field::make(q);
        for (int t = 0; t < 10; ++t) {
            auto c = random_code(f, 3, 6, 1, rng);
            VectorCode dual(c.generator().nullspace(), 1, "", false);
            auto duals = all_codewords(dual);
            for_each_subset(6, 3, [&](const std::vector<size_t>& s) {
                bool hit = false;
                for (const auto& h : duals) {
                    bool nonzero = false, inside = true;
                    for (size_t i = 0; i < 6; ++i) {
                        if (!h[i]) continue;
                        nonzero = true;
                        if (std::find(s.begin(), s.end(), i) == s.end()) inside = false;
                    }
                    if (nonzero && inside) hit = true;
                }
                CHECK(is_core(c, s, false) == !hit);
                return false;
            });
        }
    }
}

TEST_CASE("witness finder degenerate locality") {
    Field f7 = Field::make(7);
    VectorCode rs(rs_generator(f7, 5, 3), 1);
    LocalityStructure loc = make_locality(rs, 3, 3, {iota(5)});
    CHECK(loc.kind == LocalityKind::AllSymbol);
    CHECK(loc.exact);
    auto w = find_witness(rs, loc);
    CHECK(w.T.size() == 2);
    CHECK(w.rank < rs.K());
    CHECK(w.bound == 3);
    CHECK(w.bound >= min_distance(rs));
}

TEST_CASE("locality validation") {
    Field f7 = Field::make(7);
    VectorCode rs(rs_generator(f7, 6, 2), 1);
    CHECK(error_of([&] { make_locality(rs, 2, 2, {{0, 1, 2, 3}}); }) == Errc::PreconditionViolated);
    auto loc = make_locality(rs, 2, 5, {iota(6)});
    CHECK(loc.exact);
}
