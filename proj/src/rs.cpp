#include "lrc/rs.hpp"

namespace lrc {

Matrix rs_generator(const Field& f, size_t n, size_t k) {
    if (n > f.order())
        throw Error(Errc::FieldTooSmall, "Reed-Solomon length " + std::to_string(n) + " exceeds " + f.name());
    if (k == 0 || k > n) throw Error(Errc::InfeasibleParams, "Reed-Solomon needs 1 <= k <= n");
    std::vector<uint32_t> pts(n);
    for (size_t i = 0; i < n; ++i) pts[i] = uint32_t(i);
    return vandermonde(f, k, pts);
}

Matrix rs_systematic(const Field& f, size_t n, size_t k) {
    std::vector<size_t> first(k);
    for (size_t i = 0; i < k; ++i) first[i] = i;
    return systematize(rs_generator(f, n, k), first);
}

Matrix systematize(const Matrix& g, const std::vector<size_t>& cols) {
    return g.select_columns(cols).inverse() * g;
}

}  // namespace lrc
