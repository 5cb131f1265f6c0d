#include "lrc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "lrc/bounds.hpp"
#include "lrc/subsets.hpp"

namespace lrc {

namespace {

class Budget {
public:
    explicit Budget(const OracleLimits& lim) : lim_(lim) {}
    void tick() {
        if (++used_ > lim_.max_subsets && !lim_.force)
            throw Error(Errc::TooLarge, "oracle exceeded " + std::to_string(lim_.max_subsets) +
                                            " rank checks (raise LRC_MAX_ORACLE_SUBSETS or force)");
    }

private:
    const OracleLimits& lim_;
    uint64_t used_ = 0;
};

void check_size(const VectorCode& c, const OracleLimits& lim) {
    if (c.n() > lim.max_n && !lim.force)
        throw Error(Errc::TooLarge, "n = " + std::to_string(c.n()) + " exceeds exhaustive limit " +
                                        std::to_string(lim.max_n));
}

size_t min_nodes_for_rank(const VectorCode& c) { return size_t(bounds::ceil_div(int64_t(c.K()), int64_t(c.alpha()))); }

std::vector<size_t> sorted_union(const std::vector<size_t>& a, const std::vector<size_t>& b) {
    std::vector<size_t> u(a);
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

std::vector<size_t> union_of(const LocalityStructure& loc, const std::vector<size_t>& which) {
    std::vector<size_t> u;
    for (size_t i : which) u = sorted_union(u, loc.supports[i]);
    return u;
}

}  // namespace

namespace {
std::atomic<bool> g_force{false};
}

void OracleLimits::set_process_force(bool force) { g_force = force; }

OracleLimits OracleLimits::from_env() {
    OracleLimits lim;
    lim.force = g_force;
    if (const char* v = std::getenv("LRC_MAX_ORACLE_SUBSETS")) {
        char* end = nullptr;
        unsigned long long x = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0') lim.max_subsets = x;
    }
    return lim;
}

size_t min_distance(const VectorCode& c, const OracleLimits& lim) {
    check_size(c, lim);
    Budget budget(lim);
    const size_t n = c.n();
    for (size_t e = 1; e <= n; ++e) {
        bool deficient = for_each_subset(n, n - e, [&](const std::vector<size_t>& s) {
            budget.tick();
            return c.rank_of(s) < c.K();
        });
        if (deficient) return e;
    }
    return n;
}

bool distance_at_least(const VectorCode& c, size_t t, const OracleLimits& lim) {
    if (t <= 1) return true;
    if (t > c.n()) return false;
    check_size(c, lim);
    Budget budget(lim);
    return !for_each_subset(c.n(), c.n() - t + 1, [&](const std::vector<size_t>& s) {
        budget.tick();
        return c.rank_of(s) < c.K();
    });
}

InfoSet quasi_dimension(const VectorCode& c, const OracleLimits& lim) {
    auto s = min_information_set(c, {}, lim);
    if (!s) throw std::logic_error("full-rank code without an information set");
    return {s->size(), *s};
}

std::optional<std::vector<size_t>> min_information_set(const VectorCode& c, const std::vector<size_t>& exclude,
                                                       const OracleLimits& lim) {
    check_size(c, lim);
    Budget budget(lim);
    auto avail = complement(c.n(), exclude);
    for (size_t s = min_nodes_for_rank(c); s <= avail.size(); ++s) {
        std::vector<size_t> found;
        if (for_each_subset(avail.size(), s, [&](const std::vector<size_t>& pos) {
                budget.tick();
                auto nodes = pick(avail, pos);
                if (c.rank_of(nodes) < c.K()) return false;
                found = nodes;
                return true;
            })) {
            // every smaller set was already rejected, so the winner is minimal
            return found;
        }
    }
    return std::nullopt;
}

std::variant<RankProfile, NotUra> ura_profile(const VectorCode& c, const OracleLimits& lim) {
    check_size(c, lim);
    Budget budget(lim);
    RankProfile prof;
    size_t prev = 0;
    for (size_t i = 1; i <= c.n(); ++i) {
        if (prev == c.K()) {
            prof.a.push_back(0);
            continue;
        }
        std::optional<size_t> common;
        std::vector<size_t> first;
        NotUra bad;
        bool mismatch = for_each_subset(c.n(), i, [&](const std::vector<size_t>& s) {
            budget.tick();
            size_t r = c.rank_of(s);
            if (!common) {
                common = r;
                first = s;
                return false;
            }
            if (r != *common) {
                bad = NotUra{first, s, *common, r};
                return true;
            }
            return false;
        });
        if (mismatch) return bad;
        prof.a.push_back(int64_t(*common) - int64_t(prev));
        prev = *common;
    }
    return prof;
}

VectorCode puncture(const VectorCode& c, const std::vector<size_t>& nodes) {
    if (nodes.empty()) throw Error(Errc::EmptySupport, "puncture to an empty set");
    Matrix g = c.restrict(nodes);
    auto rows = g.independent_rows();
    return VectorCode(g.select_rows(rows), c.alpha(), c.tag(), false);
}

VectorCode shorten(const VectorCode& c, const std::vector<size_t>& nodes) {
    if (nodes.empty()) throw Error(Errc::EmptySupport, "shorten to an empty set");
    auto rest = complement(c.n(), nodes);
    Matrix keep = c.restrict(nodes);
    if (rest.empty()) return VectorCode(keep, c.alpha(), c.tag(), false);
    Matrix y = c.restrict(rest).left_nullspace();
    if (y.rows() == 0) throw Error(Errc::EmptyShortening, "no nonzero codeword vanishes off the kept nodes");
    return VectorCode(y * keep, c.alpha(), c.tag(), false);
}

bool is_vector_mds(const VectorCode& c, const OracleLimits& lim) {
    if (c.K() % c.alpha() != 0) return false;
    const size_t k0 = c.K() / c.alpha(), n = c.n();
    const bool oracle = min_distance(c, lim) == n - k0 + 1;

    std::optional<std::vector<size_t>> info;
    for_each_subset(n, k0, [&](const std::vector<size_t>& s) {
        if (c.rank_of(s) < c.K()) return false;
        info = s;
        return true;
    });
    bool block = false;
    if (info) {
        Matrix sys = c.restrict(*info).inverse() * c.generator();
        auto others = complement(n, *info);
        const size_t a = c.alpha();
        block = true;
        for (size_t i = 1; i <= std::min(k0, others.size()) && block; ++i) {
            for_each_subset(k0, i, [&](const std::vector<size_t>& rb) {
                for_each_subset(others.size(), i, [&](const std::vector<size_t>& cb) {
                    std::vector<size_t> rows, cols;
                    for (size_t x : rb)
                        for (size_t t = 0; t < a; ++t) rows.push_back(x * a + t);
                    for (size_t x : cb)
                        for (size_t t = 0; t < a; ++t) cols.push_back(others[x] * a + t);
                    if (sys.select_rows(rows).select_columns(cols).det() == 0) block = false;
                    return !block;
                });
                return !block;
            });
        }
    }
    if (block != oracle) throw std::logic_error("vector MDS criteria disagree");
    return oracle;
}

bool is_core(const VectorCode& c, const std::vector<size_t>& s, bool thick) {
    if (thick) return c.rank_of(s) == s.size() * c.alpha();
    return c.generator().select_columns(s).rank() == s.size();
}

WitnessSet find_witness(const VectorCode& c, const LocalityStructure& loc) {
    WitnessSet w;
    std::vector<size_t> T;
    size_t rank = 0;
    while (true) {
        size_t pick_i = loc.supports.size();
        std::vector<size_t> joined;
        size_t joined_rank = 0;
        for (size_t i = 0; i < loc.supports.size(); ++i) {
            auto u = sorted_union(T, loc.supports[i]);
            size_t r = c.rank_of(u);
            if (r > rank) {
                pick_i = i;
                joined = std::move(u);
                joined_rank = r;
                break;
            }
        }
        if (pick_i == loc.supports.size()) break;  // supports exhausted below rank K
        if (joined_rank < c.K()) {
            w.steps.push_back({pick_i, joined.size() - T.size(), joined_rank - rank});
            T = std::move(joined);
            rank = joined_rank;
            continue;
        }
        // greedy maximal subset of S_i keeping the rank below K
        std::vector<size_t> end_part;
        auto cur = T;
        size_t cur_rank = rank;
        for (size_t x : loc.supports[pick_i]) {
            if (std::binary_search(T.begin(), T.end(), x)) {
                end_part.push_back(x);
                continue;
            }
            auto trial = sorted_union(cur, {x});
            size_t r = c.rank_of(trial);
            if (r < c.K()) {
                cur = std::move(trial);
                cur_rank = r;
                end_part.push_back(x);
            }
        }
        w.sigma = 0;
        for (size_t x : end_part)
            if (std::binary_search(T.begin(), T.end(), x)) ++w.sigma;
        w.steps.push_back({pick_i, cur.size() - T.size(), cur_rank - rank});
        w.nu_end = c.K() - cur_rank;
        T = std::move(cur);
        rank = cur_rank;
        break;
    }
    w.T = T;
    w.rank = rank;
    w.bound = c.n() - T.size();
    return w;
}

namespace {

bool supports_disjoint(const LocalityStructure& loc) {
    std::set<size_t> seen;
    for (const auto& s : loc.supports)
        for (size_t x : s)
            if (!seen.insert(x).second) return false;
    return true;
}

}  // namespace

StructureReport check_optimal_structure(const VectorCode& c, const LocalityStructure& loc, const OracleLimits& lim) {
    StructureReport rep;
    const int64_t n = int64_t(c.n()), K = int64_t(c.K()), r = int64_t(loc.r), delta = int64_t(loc.delta);
    std::vector<size_t> local_rank;
    for (const auto& s : loc.supports) local_rank.push_back(c.rank_of(s));

    rep.disjoint = supports_disjoint(loc);
    if (!rep.disjoint) rep.notes.push_back("local supports overlap");

    if (c.alpha() == 1) {
        if (K % r != 0) throw Error(Errc::NotOptimalInput, "r does not divide k");
        const size_t d = min_distance(c, lim);
        int64_t bound = bounds::scalar_locality_bound(n, K, r, delta);
        if (int64_t(d) != bound)
            throw Error(Errc::NotOptimalInput,
                        "d_min " + std::to_string(d) + " differs from the locality bound " + std::to_string(bound));
        rep.locals_ok = true;
        for (size_t i = 0; i < loc.supports.size(); ++i) {
            auto local = puncture(c, loc.supports[i]);
            bool mds = int64_t(local.n()) == r + delta - 1 && int64_t(local.K()) == r &&
                       int64_t(min_distance(local, lim)) == delta;
            if (!mds) {
                rep.locals_ok = false;
                rep.notes.push_back("local code " + std::to_string(i) + " is not an [r+delta-1, r, delta] MDS code");
            }
        }
        const size_t t = size_t(K / r);
        rep.rank_conditions = true;
        if (loc.supports.size() >= t) {
            for_each_subset(loc.supports.size(), t, [&](const std::vector<size_t>& which) {
                size_t sum = 0;
                for (size_t i : which) sum += local_rank[i];
                if (c.rank_of(union_of(loc, which)) != sum) {
                    rep.rank_conditions = false;
                    rep.notes.push_back("local column spaces are not independent");
                }
                return !rep.rank_conditions;
            });
        } else {
            rep.rank_conditions = false;
            rep.notes.push_back("fewer local codes than k/r");
        }
        return rep;
    }

    std::optional<std::vector<int64_t>> profile;
    std::vector<size_t> local_kappa;
    for (const auto& s : loc.supports) {
        auto local = puncture(c, s);
        auto p = ura_profile(local, lim);
        if (!std::holds_alternative<RankProfile>(p))
            throw Error(Errc::NotOptimalInput, "a local code is not uniform-rank-accumulation");
        auto a = std::get<RankProfile>(p).a;
        if (profile && *profile != a) throw Error(Errc::NotOptimalInput, "local codes have different rank profiles");
        profile = a;
        local_kappa.push_back(quasi_dimension(local, lim).kappa);
    }
    if (!profile) throw Error(Errc::NotOptimalInput, "no local codes");
    bounds::ProfileCalculator calc(*profile);
    const size_t d = min_distance(c, lim);
    if (int64_t(d) != bounds::ura_bound(n, K, calc))
        throw Error(Errc::NotOptimalInput, "d_min " + std::to_string(d) + " differs from the URA bound " +
                                               std::to_string(bounds::ura_bound(n, K, calc)));
    if (K != bounds::rate_bound(n, int64_t(d), calc))
        throw Error(Errc::NotOptimalInput, "dimension differs from the rate bound");
    const int64_t KL = calc.k_local();
    const bool divisible = K % KL == 0;
    if (!divisible && !calc.strictly_subadditive())
        throw Error(Errc::NotOptimalInput, "profile neither divides K nor is strictly sub-additive");

    rep.locals_ok = true;
    for (size_t i = 0; i < loc.supports.size(); ++i) {
        auto local = puncture(c, loc.supports[i]);
        size_t dl = min_distance(local, lim);
        if (dl != local.n() - local_kappa[i] + 1 || int64_t(local_kappa[i]) != r || int64_t(dl) < delta) {
            rep.locals_ok = false;
            rep.notes.push_back("local code " + std::to_string(i) + " is not erasure optimal with quasi-dimension r");
        }
    }

    const size_t u1 = size_t(bounds::ceil_div(K, KL) - 1);
    auto direct_sum = [&](const std::vector<size_t>& which) {
        size_t sum = 0;
        for (size_t i : which) sum += local_rank[i];
        return c.rank_of(union_of(loc, which)) == sum;
    };
    rep.rank_conditions = true;
    const size_t L = loc.supports.size();
    if (divisible) {
        if (u1 + 1 <= L)
            for_each_subset(L, u1 + 1, [&](const std::vector<size_t>& which) {
                if (!direct_sum(which)) rep.rank_conditions = false;
                return !rep.rank_conditions;
            });
    } else {
        if (u1 >= 1 && u1 <= L)
            for_each_subset(L, u1, [&](const std::vector<size_t>& which) {
                if (!direct_sum(which)) rep.rank_conditions = false;
                return !rep.rank_conditions;
            });
        if (rep.rank_conditions && u1 + 1 <= L)
            for_each_subset(L, u1 + 1, [&](const std::vector<size_t>& which) {
                size_t all = c.rank_of(union_of(loc, which));
                for (size_t l = 0; l < which.size(); ++l) {
                    std::vector<size_t> rest;
                    for (size_t j = 0; j < which.size(); ++j)
                        if (j != l) rest.push_back(which[j]);
                    if (c.rank_of(union_of(loc, rest)) == all) rep.rank_conditions = false;
                }
                return !rep.rank_conditions;
            });
    }
    if (!rep.rank_conditions) rep.notes.push_back("local column spaces violate the rank-disjointness conditions");
    return rep;
}

std::vector<std::string> locality_violations(const VectorCode& c, const LocalityStructure& loc,
                                             const OracleLimits& lim) {
    std::vector<std::string> out;
    if (loc.r == 0 || loc.delta < 1) out.push_back("locality parameters must satisfy r >= 1, delta >= 1");
    for (size_t i = 0; i < loc.supports.size(); ++i) {
        const auto& s = loc.supports[i];
        std::string tag = "support " + std::to_string(i);
        if (s.empty()) {
            out.push_back(tag + " is empty");
            continue;
        }
        if (std::set<size_t>(s.begin(), s.end()).size() != s.size()) out.push_back(tag + " repeats a node");
        if (std::any_of(s.begin(), s.end(), [&](size_t x) { return x >= c.n(); })) {
            out.push_back(tag + " has a node out of range");
            continue;
        }
        if (s.size() > loc.r + loc.delta - 1) out.push_back(tag + " is longer than r+delta-1");
        if (min_distance(puncture(c, s), lim) < loc.delta) out.push_back(tag + " has local distance below delta");
    }
    auto cov = loc.covered();
    if (loc.kind == LocalityKind::AllSymbol && cov.size() != c.n())
        out.push_back("all-symbol locality but supports do not cover every node");
    if (c.rank_of(cov) != c.K()) out.push_back("supports do not span the code");
    return out;
}

LocalityStructure make_locality(const VectorCode& c, size_t r, size_t delta, std::vector<std::vector<size_t>> supports,
                                const OracleLimits& lim) {
    LocalityStructure loc;
    loc.r = r;
    loc.delta = delta;
    loc.supports = std::move(supports);
    loc.kind = loc.covered().size() == c.n() ? LocalityKind::AllSymbol : LocalityKind::Information;
    auto bad = locality_violations(c, loc, lim);
    if (!bad.empty()) throw Error(Errc::PreconditionViolated, "invalid locality: " + bad.front());
    loc.exact = true;
    for (const auto& s : loc.supports)
        if (s.size() != r + delta - 1 || min_distance(puncture(c, s), lim) != delta) loc.exact = false;
    return loc;
}

}  // namespace lrc
