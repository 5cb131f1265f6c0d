#include "lrc/scalar_locality.hpp"

#include <random>
#include <stdexcept>

#include "lrc/bounds.hpp"
#include "lrc/rs.hpp"
#include "lrc/subsets.hpp"

namespace lrc {

namespace {

int64_t i64(size_t x) { return int64_t(x); }

}  // namespace

Construction pyramid_construct(size_t k, size_t r, size_t delta, size_t dmin, const Field& field) {
    if (k < 1 || r < 1 || delta < 1) throw Error(Errc::InfeasibleParams, "need k, r, delta >= 1");
    if (dmin < delta) throw Error(Errc::InfeasibleParams, "target distance below the local distance");
    const size_t parent_n = k + dmin - 1;
    if (parent_n > field.order())
        throw Error(Errc::FieldTooSmall, "MDS parent of length " + std::to_string(parent_n) + " needs a larger field");
    Matrix parent = rs_systematic(field, parent_n, k);
    Matrix q = parent.block(0, k, k, dmin - 1);

    const size_t groups = size_t(bounds::ceil_div(i64(k), i64(r)));
    std::vector<Matrix> cols;
    std::vector<std::vector<size_t>> supports;
    size_t pos = 0;
    for (size_t g = 0; g < groups; ++g) {
        const size_t lo = g * r, hi = std::min(k, lo + r);
        Matrix part(field, k, (hi - lo) + (delta - 1));
        for (size_t i = lo; i < hi; ++i) part(i, i - lo) = 1;
        for (size_t i = lo; i < hi; ++i)
            for (size_t c = 0; c + 1 < delta; ++c) part(i, hi - lo + c) = q(i, c);
        supports.push_back(iota(part.cols(), pos));
        pos += part.cols();
        cols.push_back(std::move(part));
    }
    if (dmin > delta) cols.push_back(q.block(0, delta - 1, k, dmin - delta));

    Construction out;
    out.family = "pyramid";
    out.code = VectorCode(hstack(cols), 1, "pyramid", false);
    out.locality = make_locality(out.code, r, delta, supports);
    out.claimed_dmin = size_t(bounds::scalar_locality_bound(i64(out.code.n()), i64(k), i64(r), i64(delta)));
    out.params = {{"k", i64(k)}, {"r", i64(r)}, {"delta", i64(delta)}, {"d", i64(dmin)}};
    return out;
}

Construction parity_split_construct(size_t k, size_t r, size_t delta, const Field& field) {
    if (k < 1 || r < 1 || delta < 2) throw Error(Errc::InfeasibleParams, "need k, r >= 1 and delta >= 2");
    const size_t groups = size_t(bounds::ceil_div(i64(k), i64(r)));
    const size_t nl = r + delta - 1, n = groups * nl;
    if (n % nl != 0) throw Error(Errc::DivisibilityViolation, "block length is not a multiple of r+delta-1");
    const size_t kp = k + (groups - 1) * (delta - 1);
    if (n > field.order())
        throw Error(Errc::FieldTooSmall, "parity splitting needs q >= n = " + std::to_string(n));

    std::vector<uint32_t> pts(n);
    for (size_t i = 0; i < n; ++i) pts[i] = uint32_t(i);
    Matrix hp = vandermonde(field, n - kp, pts);
    Matrix h(field, groups * (delta - 1) + (n - kp - (delta - 1)), n);
    for (size_t g = 0; g < groups; ++g)
        h.paste(g * (delta - 1), g * nl, hp.block(0, g * nl, delta - 1, nl));
    if (n - kp > delta - 1) h.paste(groups * (delta - 1), 0, hp.block(delta - 1, 0, n - kp - (delta - 1), n));

    Matrix g = h.nullspace();
    if (g.rows() != k) throw std::logic_error("parity-split code has unexpected dimension");

    std::vector<std::vector<size_t>> supports;
    for (size_t i = 0; i < groups; ++i) supports.push_back(iota(nl, i * nl));

    Construction out;
    out.family = "parity_split";
    out.code = VectorCode(g, 1, "parity_split", false);
    out.locality = make_locality(out.code, r, delta, supports);
    out.claimed_dmin = size_t(bounds::scalar_locality_bound(i64(n), i64(k), i64(r), i64(delta)));
    out.params = {{"k", i64(k)}, {"r", i64(r)}, {"delta", i64(delta)}};
    return out;
}

Matrix local_parity_checks(const Field& field, size_t n, size_t r, size_t delta) {
    const size_t nl = r + delta - 1;
    if (n % nl != 0) throw Error(Errc::DivisibilityViolation, "r+delta-1 must divide n");
    if (n > field.order()) throw Error(Errc::FieldTooSmall, "need n distinct evaluation points");
    const size_t groups = n / nl;
    Matrix h(field, groups * (delta - 1), n);
    for (size_t g = 0; g < groups; ++g) {
        std::vector<uint32_t> pts(nl);
        for (size_t i = 0; i < nl; ++i) pts[i] = uint32_t(g * nl + i);
        h.paste(g * (delta - 1), g * nl, vandermonde(field, delta - 1, pts));
    }
    return h;
}

bool kcores_preserved(const Matrix& g, const Matrix& g0) {
    const size_t k = g.rows();
    return !for_each_subset(g.cols(), k, [&](const std::vector<size_t>& s) {
        return g0.select_columns(s).rank() == k && g.select_columns(s).rank() < k;
    });
}

Construction random_all_symbol_construct(size_t n, size_t k, size_t r, size_t delta, const Field& field,
                                         uint64_t seed, size_t max_attempts) {
    const size_t nl = r + delta - 1;
    if (delta < 2 || r < 1) throw Error(Errc::PreconditionViolated, "need r >= 1 and delta >= 2");
    if (n % nl != 0) throw Error(Errc::PreconditionViolated, "r+delta-1 must divide n");
    const size_t groups = n / nl;
    if (k < 1 || k > n - groups * (delta - 1))
        throw Error(Errc::PreconditionViolated, "k exceeds the dimension of the locality-only code");

    const int64_t target = bounds::scalar_locality_bound(i64(n), i64(k), i64(r), i64(delta));
    Matrix basis = local_parity_checks(field, n, r, delta).nullspace();
    std::vector<std::vector<size_t>> supports;
    for (size_t i = 0; i < groups; ++i) supports.push_back(iota(nl, i * nl));

    std::mt19937_64 rng(seed);
    size_t best = 0;
    for (size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        Matrix mix(field, k, basis.rows());
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < basis.rows(); ++j) mix(i, j) = uint32_t(rng() % field.order());
        Matrix g = mix * basis;
        if (g.rank() < k) continue;
        VectorCode code(g, 1, "random_all_symbol", false);
        size_t d = min_distance(code);
        best = std::max(best, d);
        if (i64(d) != target || !kcores_preserved(g, basis)) continue;
        Construction out;
        out.family = "random_all_symbol";
        out.code = code;
        out.locality = make_locality(code, r, delta, supports);
        out.claimed_dmin = size_t(target);
        out.params = {{"n", i64(n)}, {"k", i64(k)}, {"r", i64(r)}, {"delta", i64(delta)}};
        out.seed = seed;
        out.attempts = attempt;
        return out;
    }
    throw Error(Errc::ExhaustedAttempts, std::to_string(max_attempts) + " attempts, best d_min " +
                                             std::to_string(best) + " vs target " + std::to_string(target));
}

}  // namespace lrc
