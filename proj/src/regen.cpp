#include "lrc/regen.hpp"

#include <algorithm>
#include <set>

#include "lrc/bounds.hpp"
#include "lrc/oracle.hpp"
#include "lrc/rs.hpp"
#include "lrc/subsets.hpp"

namespace lrc {

const char* to_string(RegenPoint p) {
    switch (p) {
    case RegenPoint::MSR: return "MSR";
    case RegenPoint::MBR: return "MBR";
    default: return "other";
    }
}

RegenParams make_regen_params(size_t n, size_t k, size_t d, size_t alpha, size_t beta, size_t B) {
    if (k < 1 || k > d || d + 1 > n) throw Error(Errc::InfeasibleParams, "need 1 <= k <= d <= n-1");
    if (beta < 1 || beta > alpha) throw Error(Errc::InfeasibleParams, "need 1 <= beta <= alpha");
    const int64_t cut = bounds::cutset_bound(int64_t(k), int64_t(d), int64_t(alpha), int64_t(beta));
    if (int64_t(B) > cut) throw Error(Errc::InfeasibleParams, "file size exceeds the cut-set bound");
    RegenParams p{n, k, d, alpha, beta, B, RegenPoint::Other};
    if (alpha == (d - k + 1) * beta && B == k * alpha)
        p.point = RegenPoint::MSR;
    else if (alpha == d * beta && int64_t(B) == cut)
        p.point = RegenPoint::MBR;
    return p;
}

std::vector<uint32_t> random_vector(const Field& f, size_t len, std::mt19937_64& rng) {
    std::vector<uint32_t> v(len);
    for (auto& x : v) x = uint32_t(rng() % f.order());
    return v;
}

Field smallest_field_at_least(uint64_t q) {
    for (uint64_t c = std::max<uint64_t>(q, 2);; ++c) {
        uint64_t p = 2;
        while (c % p) ++p;
        uint64_t t = c;
        uint32_t m = 0;
        while (t % p == 0) {
            t /= p;
            ++m;
        }
        if (t == 1) return Field::make(uint32_t(p), m);
    }
}

std::vector<std::vector<size_t>> rbt_edge_map(size_t n_nodes) {
    std::vector<std::vector<size_t>> id(n_nodes, std::vector<size_t>(n_nodes, 0));
    size_t e = 0;
    for (size_t i = 0; i < n_nodes; ++i)
        for (size_t j = i + 1; j < n_nodes; ++j) id[i][j] = id[j][i] = e++;
    std::vector<std::vector<size_t>> map(n_nodes);
    for (size_t v = 0; v < n_nodes; ++v)
        for (size_t u = 0; u < n_nodes; ++u)
            if (u != v) map[v].push_back(id[v][u]);
    return map;
}

Matrix rbt_arrange(const Matrix& edge_columns, size_t n_nodes) {
    if (edge_columns.cols() != n_nodes * (n_nodes - 1) / 2)
        throw Error(Errc::ShapeMismatch, "expected one column per edge");
    std::vector<size_t> cols;
    for (const auto& node : rbt_edge_map(n_nodes)) cols.insert(cols.end(), node.begin(), node.end());
    return edge_columns.select_columns(cols);
}

namespace {

// Projection selecting the position of the edge shared by f and h in h's list.
std::vector<std::vector<Matrix>> rbt_projections(const Field& f, const std::vector<std::vector<size_t>>& map) {
    const size_t n = map.size(), alpha = n - 1;
    std::vector<std::vector<Matrix>> proj(n, std::vector<Matrix>(n));
    for (size_t fail = 0; fail < n; ++fail)
        for (size_t h = 0; h < n; ++h) {
            if (h == fail) continue;
            Matrix p(f, alpha, 1);
            for (size_t t = 0; t < alpha; ++t)
                if (std::find(map[fail].begin(), map[fail].end(), map[h][t]) != map[fail].end()) p(t, 0) = 1;
            proj[fail][h] = p;
        }
    return proj;
}

}  // namespace

RegenCode rbt_mbr_construct(size_t n_nodes, size_t k, std::optional<Field> field) {
    if (n_nodes < 2) throw Error(Errc::InfeasibleParams, "repair-by-transfer needs at least 2 nodes");
    if (k < 1 || k > n_nodes - 1) throw Error(Errc::InfeasibleParams, "need 1 <= k <= n-1");
    const size_t d = n_nodes - 1, alpha = d, edges = n_nodes * (n_nodes - 1) / 2;
    const size_t B = d * k - k * (k - 1) / 2;
    Field f = field ? *field : smallest_field_at_least(B == edges ? 2 : edges);
    Matrix pre = B == edges ? Matrix::identity(f, B) : rs_generator(f, edges, B);
    RegenCode rc;
    rc.params = make_regen_params(n_nodes, k, d, alpha, 1, B);
    rc.code = VectorCode(rbt_arrange(pre, n_nodes), alpha, "rbt_mbr");
    rc.edge_map = rbt_edge_map(n_nodes);
    rc.projections = rbt_projections(f, rc.edge_map);
    rc.provider = "rbt";
    return rc;
}

RepairTranscript rbt_repair(const RegenCode& code, size_t failed, const std::vector<uint32_t>& codeword) {
    const auto& map = code.edge_map;
    if (map.empty()) throw Error(Errc::PreconditionViolated, "code has no edge map");
    const size_t n = map.size(), alpha = code.params.alpha;
    if (failed >= n) throw Error(Errc::PreconditionViolated, "failed node out of range");
    RepairTranscript t;
    t.failed = failed;
    t.by_transfer = true;
    t.recovered.assign(alpha, 0);
    for (size_t pos = 0; pos < alpha; ++pos) {
        size_t e = map[failed][pos];
        for (size_t h = 0; h < n; ++h) {
            if (h == failed) continue;
            auto it = std::find(map[h].begin(), map[h].end(), e);
            if (it == map[h].end()) continue;
            t.helpers.push_back(h);
            t.downloads.push_back(1);
            t.recovered[pos] = codeword[h * alpha + size_t(it - map[h].begin())];
        }
    }
    t.total = t.helpers.size();
    auto stored = code.code.node_content(codeword, failed);
    t.success = stored == t.recovered;
    return t;
}

namespace {

size_t sym_index(size_t a, size_t b, size_t alpha) {
    if (a > b) std::swap(a, b);
    // position of (a, b), a <= b, in the row-wise upper triangle
    return a * alpha - a * (a - 1) / 2 + (b - a);
}

// Generator of the product-matrix code for encoding rows (phi_j, lambda_j phi_j).
Matrix pm_generator(const Field& f, const std::vector<std::vector<uint32_t>>& phi, const std::vector<uint32_t>& lambda,
                    size_t alpha) {
    const size_t n = phi.size(), half = alpha * (alpha + 1) / 2;
    Matrix g(f, 2 * half, n * alpha);
    for (size_t j = 0; j < n; ++j)
        for (size_t t = 0; t < alpha; ++t) {
            const size_t col = j * alpha + t;
            for (size_t a = 0; a < alpha; ++a) {
                const size_t s = sym_index(a, t, alpha);
                g(s, col) = f.add(g(s, col), phi[j][a]);
                g(half + s, col) = f.add(g(half + s, col), f.mul(lambda[j], phi[j][a]));
            }
        }
    return g;
}

}  // namespace

RegenCode pm_msr_construct(size_t n, size_t k, size_t d, const Field& field, uint64_t seed) {
    if (k < 1 || d + 1 > n || d < k) throw Error(Errc::InfeasibleParams, "need 1 <= k <= d <= n-1");
    if (d + 2 < 2 * k) throw Error(Errc::InfeasibleParams, "product-matrix MSR needs d >= 2k-2");
    const size_t extra = d + 2 - 2 * k;
    const size_t big_n = n + extra, alpha = d - k + 1;
    if (big_n > field.order())
        throw Error(Errc::FieldTooSmall, "need " + std::to_string(big_n) + " distinct points in " + field.name());

    const RegenParams params = make_regen_params(n, k, d, alpha, 1, k * alpha);
    std::mt19937_64 rng(seed);
    std::vector<size_t> kept = iota(n, extra);

    for (int attempt = 0; attempt < 400; ++attempt) {
        std::vector<std::vector<uint32_t>> phi(big_n, std::vector<uint32_t>(alpha));
        std::vector<uint32_t> lambda(big_n);
        // Vandermonde rows keep every alpha rows of Phi independent; lambda is
        // x^alpha first, then random distinct values
        std::vector<uint32_t> xs(big_n);
        for (size_t j = 0; j < big_n; ++j) xs[j] = uint32_t(j);
        if (attempt > 0) std::shuffle(xs.begin(), xs.end(), rng);
        for (size_t j = 0; j < big_n; ++j)
            for (size_t a = 0; a < alpha; ++a) phi[j][a] = field.pow(xs[j], a);
        if (attempt == 0) {
            for (size_t j = 0; j < big_n; ++j) lambda[j] = field.pow(xs[j], alpha);
        } else {
            std::set<uint32_t> used;
            for (auto& l : lambda) {
                do l = uint32_t(rng() % field.order());
                while (used.count(l));
                used.insert(l);
            }
        }
        if (std::set<uint32_t>(lambda.begin(), lambda.end()).size() != big_n) continue;
        Matrix g = pm_generator(field, phi, lambda, alpha);
        if (g.rank() != g.rows()) continue;
        try {
            VectorCode full(g, alpha, "pm_msr");
            RegenCode rc;
            rc.params = params;
            rc.code = extra ? shorten(full, kept) : full;
            if (rc.code.K() != k * alpha || !rc.code.thick_columns_independent()) continue;
            rc.code.set_tag("pm_msr");
            rc.projections.assign(n, std::vector<Matrix>(n));
            for (size_t fl = 0; fl < n; ++fl)
                for (size_t h = 0; h < n; ++h)
                    if (h != fl) {
                        Matrix p(field, alpha, 1);
                        for (size_t a = 0; a < alpha; ++a) p(a, 0) = phi[fl + extra][a];
                        rc.projections[fl][h] = p;
                    }
            rc.provider = "pm";
            if (check_regen_contracts(rc, seed).ok) return rc;
        } catch (const Error&) {
        }
    }
    throw Error(Errc::FieldTooSmall, "no valid product-matrix instance found over " + field.name());
}

RegenCode trivial_msr(size_t n, size_t k, const Field& field) {
    if (k >= n) throw Error(Errc::InfeasibleParams, "trivial MSR needs k < n");
    RegenCode rc;
    rc.params = make_regen_params(n, k, k, 1, 1, k);
    rc.code = VectorCode(rs_systematic(field, n, k), 1, "trivial_msr");
    rc.projections.assign(n, std::vector<Matrix>(n));
    for (size_t f = 0; f < n; ++f)
        for (size_t h = 0; h < n; ++h)
            if (f != h) rc.projections[f][h] = Matrix::identity(field, 1);
    rc.provider = "trivial";
    return rc;
}

std::vector<uint32_t> data_collect(const RegenCode& code, const std::vector<size_t>& nodes,
                                   const std::vector<uint32_t>& codeword) {
    if (nodes.size() != code.params.k)
        throw Error(Errc::PreconditionViolated, "data collection needs exactly k nodes");
    const auto& c = code.code;
    Matrix sub = c.restrict(nodes);
    if (sub.rank() < c.K()) throw Error(Errc::Unrecoverable, "selected nodes do not determine the message");
    auto cols = c.thin_columns(nodes);
    Matrix y(c.field(), 1, cols.size());
    for (size_t i = 0; i < cols.size(); ++i) y(0, i) = codeword.at(cols[i]);
    // m * sub = y  <=>  sub^T m^T = y^T
    Matrix m = sub.transpose().solve(y.transpose());
    return std::vector<uint32_t>(m.data().begin(), m.data().end());
}

RepairTranscript regen_repair(const RegenCode& code, size_t failed, const std::vector<size_t>& helpers,
                              const std::vector<uint32_t>& codeword) {
    const auto& p = code.params;
    const auto& c = code.code;
    if (failed >= c.n()) throw Error(Errc::PreconditionViolated, "failed node out of range");
    if (helpers.size() != p.d) throw Error(Errc::PreconditionViolated, "repair needs exactly d helpers");
    if (std::find(helpers.begin(), helpers.end(), failed) != helpers.end())
        throw Error(Errc::PreconditionViolated, "failed node listed as a helper");
    if (std::set<size_t>(helpers.begin(), helpers.end()).size() != helpers.size())
        throw Error(Errc::PreconditionViolated, "repeated helper");

    const Field& f = c.field();
    std::vector<Matrix> eff;  // K x beta effective columns
    std::vector<uint32_t> down;
    RepairTranscript t;
    t.failed = failed;
    t.helpers = helpers;
    for (size_t h : helpers) {
        const Matrix& proj = code.projections.at(failed).at(h);
        size_t node = h;
        eff.push_back(c.restrict(std::span<const size_t>(&node, 1)) * proj);
        auto content = c.node_content(codeword, h);
        Matrix row(f, 1, content.size(), content);
        Matrix y = row * proj;
        down.insert(down.end(), y.data().begin(), y.data().end());
        t.downloads.push_back(proj.cols());
    }
    for (size_t x : t.downloads) t.total += x;
    size_t node = failed;
    Matrix target = c.restrict(std::span<const size_t>(&node, 1));
    Matrix x;
    try {
        x = hstack(eff).solve(target);
    } catch (const Error& e) {
        if (e.code() != Errc::NoSolution) throw;
        throw Error(Errc::RepairFailed, "downloads do not span node " + std::to_string(failed));
    }
    t.recovered = vec_mul(down, x);
    t.success = t.recovered == c.node_content(codeword, failed);
    if (!t.success) throw Error(Errc::RepairFailed, "repaired content differs from the stored content");
    return t;
}

RegenCode restrict_regen(const RegenCode& code, const std::vector<size_t>& nodes) {
    if (nodes.size() <= code.params.d) throw Error(Errc::PreconditionViolated, "restriction must keep more than d nodes");
    RegenCode out;
    out.code = puncture(code.code, nodes);
    out.params = make_regen_params(nodes.size(), code.params.k, code.params.d, code.params.alpha, code.params.beta,
                                   out.code.K());
    out.projections.assign(nodes.size(), std::vector<Matrix>(nodes.size()));
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j)
            if (i != j) out.projections[i][j] = code.projections.at(nodes[i]).at(nodes[j]);
    if (!code.edge_map.empty())
        for (size_t v : nodes) out.edge_map.push_back(code.edge_map[v]);
    out.provider = code.provider;
    return out;
}

ContractReport check_regen_contracts(const RegenCode& code, uint64_t seed) {
    ContractReport rep;
    const auto& c = code.code;
    const auto& p = code.params;
    std::mt19937_64 rng(seed);
    auto msg = random_vector(c.field(), c.K(), rng);
    auto word = c.encode(msg);
    try {
        for_each_subset(c.n(), p.k, [&](const std::vector<size_t>& s) {
            ++rep.collections;
            if (data_collect(code, s, word) != msg) {
                rep.ok = false;
                rep.failure = "data collection returned a different message";
            }
            return !rep.ok;
        });
        for (size_t f = 0; f < c.n() && rep.ok; ++f) {
            auto others = complement(c.n(), {f});
            for_each_subset(others.size(), p.d, [&](const std::vector<size_t>& pos) {
                ++rep.repairs;
                auto t = regen_repair(code, f, pick(others, pos), word);
                if (!t.success || t.total != p.d * p.beta) {
                    rep.ok = false;
                    rep.failure = "repair of node " + std::to_string(f) + " failed";
                }
                return !rep.ok;
            });
        }
    } catch (const Error& e) {
        rep.ok = false;
        rep.failure = e.what();
    }
    return rep;
}

}  // namespace lrc
