#include "lrc/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "lrc/subsets.hpp"

namespace lrc {

const char* to_string(RepairPolicy p) {
    switch (p) {
    case RepairPolicy::Regenerating: return "regenerating";
    case RepairPolicy::LocalRegenerating: return "local_regenerating";
    case RepairPolicy::LocalDecode: return "local_decode";
    default: return "reconstruct";
    }
}

namespace {

std::vector<uint32_t> restrict_word(const VectorCode& c, const std::vector<uint32_t>& word,
                                    const std::vector<size_t>& nodes) {
    std::vector<uint32_t> out;
    for (size_t v : nodes) {
        auto part = c.node_content(word, v);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Canonical helpers: the first d nodes other than the failed one.
std::vector<size_t> first_helpers(size_t n, size_t failed, size_t d) {
    auto others = complement(n, {failed});
    others.resize(d);
    return others;
}

RepairTranscript regen_transcript(const RegenCode& rc, size_t failed, const std::vector<uint32_t>& word) {
    if (!rc.edge_map.empty()) return rbt_repair(rc, failed, word);
    return regen_repair(rc, failed, first_helpers(rc.code.n(), failed, rc.params.d), word);
}

// Downloads whole nodes and solves for the failed one.
RepairTranscript full_node_transcript(const VectorCode& c, size_t failed, const std::vector<size_t>& helpers,
                                      const std::vector<uint32_t>& word) {
    RepairTranscript t;
    t.failed = failed;
    t.helpers = helpers;
    t.downloads.assign(helpers.size(), c.alpha());
    t.total = helpers.size() * c.alpha();
    size_t node = failed;
    Matrix x = c.restrict(helpers).solve(c.restrict(std::span<const size_t>(&node, 1)));
    t.recovered = vec_mul(restrict_word(c, word, helpers), x);
    t.success = t.recovered == c.node_content(word, failed);
    return t;
}

std::optional<std::vector<size_t>> smallest_recovering(const VectorCode& c, size_t failed,
                                                       const std::vector<size_t>& pool) {
    std::vector<size_t> cand;
    for (size_t v : pool)
        if (v != failed) cand.push_back(v);
    for (size_t s = 1; s <= cand.size(); ++s) {
        std::vector<size_t> found;
        if (for_each_subset(cand.size(), s, [&](const std::vector<size_t>& pos) {
                auto h = pick(cand, pos);
                auto with = h;
                with.push_back(failed);
                if (c.rank_of(with) != c.rank_of(h)) return false;
                found = h;
                return true;
            }))
            return found;
    }
    return std::nullopt;
}

}  // namespace

double repair_cost(double xi, double Omega, double gamma_K, double gamma_S) { return gamma_K * xi + gamma_S * Omega; }

ComparisonRecord repair_sweep(const Construction& c, double gamma_K, double gamma_S, uint64_t seed,
                              const OracleLimits& lim) {
    const VectorCode& code = c.code;
    std::mt19937_64 rng(seed);
    auto word = code.encode(random_vector(code.field(), code.K(), rng));

    ComparisonRecord rec;
    rec.family = c.family;
    rec.n = code.n();
    rec.K = code.K();
    rec.alpha = code.alpha();
    rec.dmin = min_distance(code, lim);
    rec.gamma_K = gamma_K;
    rec.gamma_S = gamma_S;

    double total = 0;
    for (size_t v = 0; v < code.n(); ++v) {
        NodeRepair nr;
        nr.node = v;
        std::optional<size_t> local;
        if (c.locality)
            for (size_t i = 0; i < c.locality->supports.size() && !local; ++i) {
                const auto& s = c.locality->supports[i];
                if (std::find(s.begin(), s.end(), v) != s.end()) local = i;
            }
        if (c.regen) {
            nr.policy = RepairPolicy::Regenerating;
            nr.transcript = regen_transcript(*c.regen, v, word);
        } else if (local && *local < c.local_regen.size() && c.local_regen[*local]) {
            const auto& s = c.locality->supports[*local];
            const size_t pos = size_t(std::find(s.begin(), s.end(), v) - s.begin());
            nr.policy = RepairPolicy::LocalRegenerating;
            nr.transcript = regen_transcript(*c.local_regen[*local], pos, restrict_word(code, word, s));
            nr.transcript.failed = v;
            for (auto& h : nr.transcript.helpers) h = s[h];
        } else if (local) {
            auto helpers = smallest_recovering(code, v, c.locality->supports[*local]);
            if (!helpers) throw Error(Errc::RepairUndefined, "node " + std::to_string(v) + " is not recoverable locally");
            nr.policy = RepairPolicy::LocalDecode;
            nr.transcript = full_node_transcript(code, v, *helpers, word);
        } else {
            auto helpers = min_information_set(code, {v}, lim);
            if (!helpers)
                throw Error(Errc::RepairUndefined, "no information set avoids node " + std::to_string(v));
            nr.policy = RepairPolicy::Reconstruct;
            nr.transcript = full_node_transcript(code, v, *helpers, word);
        }
        if (!nr.transcript.success) throw Error(Errc::RepairFailed, "node " + std::to_string(v) + " was not repaired");
        std::vector<size_t> distinct = nr.transcript.helpers;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        rec.h = std::max(rec.h, distinct.size());
        total += double(nr.transcript.total);
        rec.repairs.push_back(std::move(nr));
    }
    rec.omega_bar = total / double(code.n());
    rec.Omega = double(code.n() * code.alpha()) / double(code.K());
    rec.xi = double(code.n()) * rec.omega_bar / double(code.K());
    rec.cost = repair_cost(rec.xi, rec.Omega, gamma_K, gamma_S);
    return rec;
}

std::string csv_header() { return "family,n,K,alpha,dmin,omega_bar,Omega,xi,h,cost\n"; }

std::string csv_row(const ComparisonRecord& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%zu,%zu,%.6g,%.6g,%.6g,%zu,%.6g\n", r.family.c_str(), r.n, r.K, r.alpha,
                  r.dmin, r.omega_bar, r.Omega, r.xi, r.h, r.cost);
    return buf;
}

std::string compare_csv(const std::vector<Construction>& codes, double gamma_K, double gamma_S,
                        const OracleLimits& lim) {
    std::string out = csv_header();
    for (const auto& c : codes) out += csv_row(repair_sweep(c, gamma_K, gamma_S, 7, lim));
    return out;
}

}  // namespace lrc
