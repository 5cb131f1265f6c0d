#include "lrc/local_regen.hpp"

#include <random>

#include "lrc/bounds.hpp"
#include "lrc/rs.hpp"
#include "lrc/scalar_locality.hpp"
#include "lrc/subsets.hpp"

namespace lrc {

namespace {

int64_t i64(size_t x) { return int64_t(x); }

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::PreconditionViolated, what);
}

size_t local_length(const LocalRegenSpec& s) {
    require(s.r >= 1 && s.delta >= 2, "need r >= 1 and delta >= 2");
    require(s.m >= 1, "need at least one local code");
    return s.r + s.delta - 1;
}

// Largest allowed repair degree when product-matrix applies, otherwise d = k.
size_t default_degree(size_t k, size_t d_max) { return d_max + 2 >= 2 * k ? d_max : k; }

std::vector<std::vector<size_t>> consecutive_supports(size_t count, size_t len) {
    std::vector<std::vector<size_t>> out;
    for (size_t i = 0; i < count; ++i) out.push_back(iota(len, i * len));
    return out;
}

// Regenerating structure of a local code whose nodes are parent_nodes of parent.
RegenCode attach(const RegenCode& parent, const std::vector<size_t>& parent_nodes, VectorCode local, size_t d_local) {
    RegenCode rc;
    const auto& pp = parent.params;
    rc.params = make_regen_params(local.n(), local.K() / local.alpha(), d_local, pp.alpha, pp.beta, local.K());
    rc.code = std::move(local);
    const size_t n = parent_nodes.size();
    rc.projections.assign(n, std::vector<Matrix>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) rc.projections[i][j] = parent.projections.at(parent_nodes[i]).at(parent_nodes[j]);
    rc.provider = parent.provider;
    return rc;
}

Matrix random_matrix(const Field& f, size_t rows, size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = uint32_t(rng() % f.order());
    return m;
}

Matrix repeat_block_diag(const Matrix& b, size_t times) {
    return block_diag(std::vector<Matrix>(times, b));
}

std::vector<std::pair<std::string, int64_t>> msr_params(const LocalRegenSpec& s, size_t d, size_t alpha) {
    return {{"r", i64(s.r)},         {"delta", i64(s.delta)}, {"m", i64(s.m)},
            {"Delta", i64(s.Delta)}, {"d", i64(d)},           {"alpha", i64(alpha)}};
}

}  // namespace

RegenCode msr_component(size_t n, size_t k, size_t d, const Field& field, uint64_t seed) {
    if (d + 2 >= 2 * k) {
        try {
            return pm_msr_construct(n, k, d, field, seed);
        } catch (const Error& e) {
            if (d != k || e.code() != Errc::FieldTooSmall) throw;
        }
    }
    if (d == k) return trivial_msr(n, k, field);
    throw Error(Errc::InfeasibleComponent, "no MSR provider for (" + std::to_string(n) + "," + std::to_string(k) + "," +
                                               std::to_string(d) + ")");
}

Construction sum_parity_msr(const LocalRegenSpec& s) {
    const size_t nl = local_length(s), r = s.r, m = s.m;
    const size_t d = s.d.value_or(default_degree(r, nl - 1));
    if (d < r || d > nl - 1)
        throw Error(Errc::InfeasibleComponent, "component repair degree must satisfy r <= d <= r+delta-2");
    RegenCode parent = msr_component(nl + s.Delta, r, d, s.field, s.seed);
    const size_t alpha = parent.params.alpha, ka = r * alpha;
    const Matrix& g0 = parent.code.generator();
    Matrix gl = g0.block(0, 0, ka, nl * alpha);
    Matrix q = g0.block(0, nl * alpha, ka, s.Delta * alpha);

    Matrix g(s.field, m * ka, (m * nl + s.Delta) * alpha);
    for (size_t i = 0; i < m; ++i) {
        g.paste(i * ka, i * nl * alpha, gl);
        if (s.Delta) g.paste(i * ka, m * nl * alpha, q);
    }

    Construction out;
    out.family = "sum_parity_msr";
    out.code = VectorCode(g, alpha, out.family);
    auto supports = consecutive_supports(m, nl);
    out.locality = make_locality(out.code, r, s.delta, supports);
    out.claimed_dmin =
        size_t(bounds::msr_k_bound(i64(out.code.n()), i64(out.code.K()), i64(alpha), i64(r), i64(s.delta)));
    out.claim_exact = s.delta >= s.Delta;
    out.params = msr_params(s, d, alpha);
    out.seed = s.seed;
    out.provider = parent.provider;
    for (const auto& sup : supports) out.local_regen.push_back(attach(parent, iota(nl), puncture(out.code, sup), d));
    return out;
}

Construction pyramid_msr(const LocalRegenSpec& s) {
    const size_t nl = local_length(s), r = s.r, m = s.m, kp = m * r;
    const size_t np = kp + s.delta - 1 + s.Delta;
    const size_t d = s.d.value_or(default_degree(kp, kp + s.delta - 2));
    if (d < kp || d > kp + s.delta - 2)
        throw Error(Errc::InfeasibleComponent, "parent repair degree must satisfy mr <= d <= mr+delta-2");
    RegenCode parent = msr_component(np, kp, d, s.field, s.seed);
    const size_t alpha = parent.params.alpha, ka = r * alpha, par = (s.delta - 1) * alpha;
    Matrix gs = systematize(parent.code.generator(), parent.code.thin_columns(iota(kp)));
    Matrix q = gs.block(0, kp * alpha, kp * alpha, par);

    std::vector<Matrix> cols;
    for (size_t i = 0; i < m; ++i) {
        Matrix part(s.field, kp * alpha, ka + par);
        part.paste(i * ka, 0, Matrix::identity(s.field, ka));
        part.paste(i * ka, ka, q.block(i * ka, 0, ka, par));
        cols.push_back(std::move(part));
    }
    if (s.Delta) cols.push_back(gs.block(0, (kp + s.delta - 1) * alpha, kp * alpha, s.Delta * alpha));

    Construction out;
    out.family = "pyramid_msr";
    out.code = VectorCode(hstack(cols), alpha, out.family);
    auto supports = consecutive_supports(m, nl);
    out.locality = make_locality(out.code, r, s.delta, supports);
    out.claimed_dmin =
        size_t(bounds::msr_k_bound(i64(out.code.n()), i64(out.code.K()), i64(alpha), i64(r), i64(s.delta)));
    out.params = msr_params(s, d, alpha);
    out.seed = s.seed;
    out.provider = parent.provider;
    for (size_t i = 0; i < m; ++i) {
        std::vector<size_t> map = iota(r, i * r);
        for (size_t c = 0; c + 1 < s.delta; ++c) map.push_back(kp + c);
        out.local_regen.push_back(attach(parent, map, puncture(out.code, supports[i]), d - (m - 1) * r));
    }
    return out;
}

bool info_sets_certified(const VectorCode& c, const std::vector<std::vector<size_t>>& supports, size_t per_local,
                         size_t total) {
    std::vector<int> owner(c.n(), -1);
    for (size_t i = 0; i < supports.size(); ++i)
        for (size_t v : supports[i]) owner[v] = int(i);
    return !for_each_subset(c.n(), total, [&](const std::vector<size_t>& t) {
        std::vector<size_t> count(supports.size(), 0);
        for (size_t v : t)
            if (owner[v] >= 0 && ++count[size_t(owner[v])] > per_local) return false;
        return c.rank_of(t) != c.K();
    });
}

bool thick_cores_preserved(const VectorCode& c, const VectorCode& c0, size_t ell) {
    const size_t full = ell * c.alpha();
    return !for_each_subset(c.n(), ell, [&](const std::vector<size_t>& t) {
        return c0.rank_of(t) == full && c.rank_of(t) != full;
    });
}

Construction random_msr_info(const LocalRegenSpec& s) {
    const size_t nl = local_length(s), r = s.r, m = s.m;
    const size_t d = s.d.value_or(default_degree(r, nl - 1));
    if (d < r || d > nl - 1) throw Error(Errc::InfeasibleComponent, "component repair degree out of range");
    RegenCode comp = msr_component(nl, r, d, s.field, s.seed);
    const size_t alpha = comp.params.alpha, K = m * r * alpha;
    Matrix local = repeat_block_diag(comp.code.generator(), m);
    auto supports = consecutive_supports(m, nl);
    const size_t n = m * nl + s.Delta;
    const int64_t target = bounds::msr_k_bound(i64(n), i64(K), i64(alpha), i64(r), i64(s.delta));

    std::mt19937_64 rng(s.seed);
    for (size_t attempt = 1; attempt <= s.max_attempts; ++attempt) {
        Matrix g = s.Delta ? hstack({local, random_matrix(s.field, K, s.Delta * alpha, rng)}) : local;
        VectorCode code(g, alpha, "random_msr_info", false);
        if (!code.thick_columns_independent()) continue;
        if (!info_sets_certified(code, supports, r, m * r)) continue;
        if (i64(min_distance(code)) != target) continue;
        Construction out;
        out.family = "random_msr_info";
        out.code = code;
        out.locality = make_locality(code, r, s.delta, supports);
        out.claimed_dmin = size_t(target);
        out.params = msr_params(s, d, alpha);
        out.seed = s.seed;
        out.attempts = attempt;
        out.provider = comp.provider;
        for (const auto& sup : supports) out.local_regen.push_back(attach(comp, iota(nl), puncture(code, sup), d));
        return out;
    }
    throw Error(Errc::ExhaustedAttempts, "no certified code in " + std::to_string(s.max_attempts) + " attempts");
}

Construction random_msr_all_symbol(const LocalRegenSpec& s) {
    const size_t nl = local_length(s), r = s.r, m = s.m, ell = s.ell;
    require(ell >= r, "need ell >= r");
    require(m * r >= ell, "need m >= ell / r");
    const size_t n = m * nl;
    require(s.n == 0 || s.n == n, "n must equal m (r + delta - 1)");
    const size_t d = s.d.value_or(default_degree(r, nl - 1));
    if (d < r || d > nl - 1) throw Error(Errc::InfeasibleComponent, "component repair degree out of range");
    RegenCode comp = msr_component(nl, r, d, s.field, s.seed);
    const size_t alpha = comp.params.alpha, K = ell * alpha;
    VectorCode c0(repeat_block_diag(comp.code.generator(), m), alpha, "locality_only");
    Matrix h0 = repeat_block_diag(comp.code.generator().nullspace(), m);
    auto supports = consecutive_supports(m, nl);
    const int64_t target = bounds::msr_k_bound(i64(n), i64(K), i64(alpha), i64(r), i64(s.delta));

    std::mt19937_64 rng(s.seed);
    for (size_t attempt = 1; attempt <= s.max_attempts; ++attempt) {
        const size_t extra = (m * r - ell) * alpha;
        Matrix h = extra ? vstack({h0, random_matrix(s.field, extra, n * alpha, rng)}) : h0;
        Matrix g = h.nullspace();
        if (g.rows() != K) continue;
        VectorCode code(g, alpha, "random_msr_allsym", false);
        if (!code.thick_columns_independent()) continue;
        if (!thick_cores_preserved(code, c0, ell)) continue;
        if (i64(min_distance(code)) != target) continue;
        Construction out;
        out.family = "random_msr_allsym";
        out.code = code;
        out.locality = make_locality(code, r, s.delta, supports);
        out.claimed_dmin = size_t(target);
        out.params = msr_params(s, d, alpha);
        out.params.emplace_back("ell", i64(ell));
        out.seed = s.seed;
        out.attempts = attempt;
        out.provider = comp.provider;
        for (const auto& sup : supports) out.local_regen.push_back(attach(comp, iota(nl), puncture(code, sup), d));
        return out;
    }
    throw Error(Errc::ExhaustedAttempts, "no certified code in " + std::to_string(s.max_attempts) + " attempts");
}

namespace {

struct MbrShape {
    size_t nl, alpha, kl, NL, dl;
};

MbrShape mbr_shape(const LocalRegenSpec& s) {
    const size_t nl = local_length(s), alpha = nl - 1;
    const size_t kl = s.r * alpha - s.r * (s.r - 1) / 2, NL = nl * (nl - 1) / 2;
    return {nl, alpha, kl, NL, NL - kl + 1};
}

// Rearranges stage-one local blocks of N_L scalar columns into RBT nodes.
std::vector<Matrix> rbt_blocks(const Matrix& a, const MbrShape& sh, size_t m) {
    std::vector<Matrix> out;
    for (size_t i = 0; i < m; ++i) out.push_back(rbt_arrange(a.select_columns(iota(sh.NL, i * sh.NL)), sh.nl));
    return out;
}

void attach_rbt(Construction& out, const LocalRegenSpec& s, const MbrShape& sh) {
    for (const auto& sup : out.locality->supports) {
        RegenCode rc = rbt_mbr_construct(sh.nl, s.r, s.field);
        rc.code = puncture(out.code, sup);
        rc.params = make_regen_params(sh.nl, s.r, sh.nl - 1, sh.alpha, 1, rc.code.K());
        out.local_regen.push_back(std::move(rc));
    }
}

std::vector<std::pair<std::string, int64_t>> mbr_params(const LocalRegenSpec& s, const MbrShape& sh) {
    return {{"r", i64(s.r)},           {"delta", i64(s.delta)}, {"m", i64(s.m)},
            {"alpha", i64(sh.alpha)},  {"K_L", i64(sh.kl)},     {"N_L", i64(sh.NL)},
            {"Delta_L", i64(sh.dl)}};
}

}  // namespace

Construction rbt_mbr_local(const LocalRegenSpec& s) {
    const MbrShape sh = mbr_shape(s);
    const size_t m = s.m;
    Construction stage = pyramid_construct(m * sh.kl, sh.kl, sh.dl, sh.dl + s.Delta * sh.alpha, s.field);
    const Matrix& a = stage.code.generator();
    auto cols = rbt_blocks(a, sh, m);
    if (s.Delta) cols.push_back(a.select_columns(iota(s.Delta * sh.alpha, m * sh.NL)));

    Construction out;
    out.family = "rbt_mbr_info";
    out.code = VectorCode(hstack(cols), sh.alpha, out.family);
    out.locality = make_locality(out.code, s.r, s.delta, consecutive_supports(m, sh.nl));
    out.claimed_dmin = size_t(bounds::ura_bound(i64(out.code.n()), i64(out.code.K()),
                                                bounds::mbr_profile(i64(sh.alpha), i64(s.r), i64(s.delta))));
    out.params = mbr_params(s, sh);
    out.params.emplace_back("Delta", i64(s.Delta));
    out.provider = "rbt";
    attach_rbt(out, s, sh);
    return out;
}

Construction rbt_mbr_all_symbol(const LocalRegenSpec& s) {
    const MbrShape sh = mbr_shape(s);
    const size_t m = s.m, ell = s.ell;
    require(ell >= 1 && ell <= s.m, "need 1 <= ell <= m");
    require(s.n == 0 || s.n == m * sh.nl, "n must equal m (r + delta - 1)");
    const size_t len = m * sh.NL, k = ell * sh.kl;

    Matrix a;
    size_t attempts = 1;
    try {
        if (k == len)
            a = Matrix::identity(s.field, k);
        else if (sh.dl == 1)
            a = rs_generator(s.field, len, k);
        else {
            Construction stage = random_all_symbol_construct(len, k, sh.kl, sh.dl, s.field, s.seed, s.max_attempts);
            a = stage.code.generator();
            attempts = stage.attempts;
        }
    } catch (const Error& e) {
        throw Error(Errc::StageOneFailed, e.what());
    }

    Construction out;
    out.family = "rbt_mbr_allsym";
    out.code = VectorCode(hstack(rbt_blocks(a, sh, m)), sh.alpha, out.family);
    out.locality = make_locality(out.code, s.r, s.delta, consecutive_supports(m, sh.nl));
    out.claimed_dmin = (m - ell) * sh.nl + s.delta;
    out.params = mbr_params(s, sh);
    out.params.emplace_back("ell", i64(ell));
    out.seed = s.seed;
    out.attempts = attempts;
    out.provider = "rbt";
    attach_rbt(out, s, sh);
    return out;
}

Construction product_cyclic(const LocalRegenSpec& s) {
    require(s.r >= 1 && s.delta >= 2 && s.kappa >= 1, "need r, kappa >= 1 and delta >= 2");
    const size_t nl = s.r + s.delta - 1, n = s.n;
    if (n == 0 || n % nl != 0) throw Error(Errc::DivisibilityViolation, "r+delta-1 must divide n");
    const size_t kp = s.kappa + (size_t(bounds::ceil_div(i64(s.kappa), i64(s.r))) - 1) * (s.delta - 1);
    require(kp < n, "row code dimension k' must be below n");
    Matrix row = rs_generator(s.field, n, kp);
    Matrix col = rs_generator(s.field, nl, s.r);

    // node j keeps, in row i, array column (j - i) mod n_L of its partition
    Matrix g(s.field, s.r * kp, n * nl);
    for (size_t j = 0; j < n; ++j) {
        const size_t base = j - j % nl, t = j % nl;
        for (size_t i = 0; i < nl; ++i) {
            const size_t src = base + (t + nl - i) % nl;
            for (size_t a = 0; a < s.r; ++a)
                for (size_t b = 0; b < kp; ++b) g(a * kp + b, j * nl + i) = s.field.mul(col(a, i), row(b, src));
        }
    }

    Construction out;
    out.family = "product_cyclic";
    out.code = VectorCode(g, nl, out.family, false);
    out.locality = make_locality(out.code, s.r, s.delta, consecutive_supports(n / nl, nl));
    out.claimed_dmin = n - kp + 1;
    out.params = {{"n", i64(n)},         {"kappa", i64(s.kappa)}, {"r", i64(s.r)},
                  {"delta", i64(s.delta)}, {"k_prime", i64(kp)}};
    out.provider = "rs";
    return out;
}

Construction stack(const Construction& base, size_t alpha) {
    if (base.code.alpha() != 1) throw Error(Errc::PreconditionViolated, "stacking needs a scalar base code");
    if (alpha < 1) throw Error(Errc::PreconditionViolated, "need alpha >= 1");
    if (alpha == 1) return base;
    Construction out = base;
    out.family = "stack";
    out.code = VectorCode(expand_columns(base.code.generator(), alpha), alpha, "stack", false);
    if (base.locality)
        out.locality = make_locality(out.code, base.locality->r, base.locality->delta, base.locality->supports);
    out.params.emplace_back("alpha", i64(alpha));
    out.provider = base.family;
    out.regen.reset();
    out.local_regen.clear();
    return out;
}

Construction construct_local_regen(const LocalRegenSpec& s) {
    if (s.family == "sum_parity_msr") return sum_parity_msr(s);
    if (s.family == "pyramid_msr") return pyramid_msr(s);
    if (s.family == "random_msr_info") return random_msr_info(s);
    if (s.family == "random_msr_allsym") return random_msr_all_symbol(s);
    if (s.family == "rbt_mbr_info") return rbt_mbr_local(s);
    if (s.family == "rbt_mbr_allsym") return rbt_mbr_all_symbol(s);
    if (s.family == "product_cyclic") return product_cyclic(s);
    throw Error(Errc::PreconditionViolated, "unknown family '" + s.family + "'");
}

}  // namespace lrc
