#include "lrc/vector_code.hpp"

#include <algorithm>

#include "lrc/subsets.hpp"

namespace lrc {

std::vector<size_t> complement(size_t n, const std::vector<size_t>& s) {
    std::vector<bool> in(n, false);
    for (size_t x : s) in.at(x) = true;
    std::vector<size_t> out;
    for (size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

std::vector<size_t> iota(size_t n, size_t start) {
    std::vector<size_t> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = start + i;
    return v;
}

VectorCode::VectorCode(Matrix generator, size_t alpha, std::string tag, bool strict_thick)
    : g_(std::move(generator)), alpha_(alpha), tag_(std::move(tag)) {
    if (alpha_ == 0 || g_.cols() % alpha_ != 0)
        throw Error(Errc::ShapeMismatch, "generator width is not a multiple of alpha");
    if (g_.rows() == 0) throw Error(Errc::RankDeficient, "generator has no rows");
    n_ = g_.cols() / alpha_;
    if (g_.rank() != g_.rows()) throw Error(Errc::RankDeficient, "generator rows are linearly dependent");
    for (size_t i = 0; i < n_ && thick_ok_; ++i) {
        size_t node = i;
        if (rank_of(std::span<const size_t>(&node, 1)) != alpha_) thick_ok_ = false;
    }
    if (!thick_ok_ && strict_thick)
        throw Error(Errc::DependentThickColumns, "a node's alpha columns are linearly dependent");
}

std::vector<size_t> VectorCode::thin_columns(std::span<const size_t> nodes) const {
    std::vector<size_t> cols;
    cols.reserve(nodes.size() * alpha_);
    for (size_t v : nodes) {
        if (v >= n_) throw Error(Errc::ShapeMismatch, "node index out of range");
        for (size_t a = 0; a < alpha_; ++a) cols.push_back(v * alpha_ + a);
    }
    return cols;
}

Matrix VectorCode::restrict(std::span<const size_t> nodes) const {
    auto cols = thin_columns(nodes);
    return g_.select_columns(cols);
}

size_t VectorCode::rank_of(std::span<const size_t> nodes) const {
    if (nodes.empty()) return 0;
    return restrict(nodes).rank();
}

std::vector<uint32_t> VectorCode::encode(std::span<const uint32_t> message) const { return vec_mul(message, g_); }

std::vector<uint32_t> VectorCode::node_content(std::span<const uint32_t> codeword, size_t node) const {
    if (codeword.size() != n_ * alpha_) throw Error(Errc::ShapeMismatch, "codeword length");
    return {codeword.begin() + node * alpha_, codeword.begin() + (node + 1) * alpha_};
}

Matrix expand_columns(const Matrix& g, size_t alpha) {
    Matrix out(g.field(), g.rows() * alpha, g.cols() * alpha);
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j)
            for (size_t a = 0; a < alpha; ++a) out(i * alpha + a, j * alpha + a) = g(i, j);
    return out;
}

std::vector<size_t> LocalityStructure::covered() const {
    std::vector<size_t> u;
    for (const auto& s : supports) u.insert(u.end(), s.begin(), s.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

const char* to_string(LocalityKind k) { return k == LocalityKind::AllSymbol ? "all-symbol" : "information"; }

}  // namespace lrc
