#pragma once

#include <span>
#include <string>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc {

// Linear code over GF(q) whose n symbols ("nodes") are each alpha field
// elements. Generator is K x (n * alpha); node i owns columns [i*alpha, (i+1)*alpha).
class VectorCode {
public:
    VectorCode() = default;
    // Requires full row rank. With strict_thick the alpha columns of every node
    // must be independent; otherwise a violation only clears the flag.
    VectorCode(Matrix generator, size_t alpha, std::string tag = {}, bool strict_thick = true);

    const Matrix& generator() const { return g_; }
    const Field& field() const { return g_.field(); }
    size_t n() const { return n_; }
    size_t alpha() const { return alpha_; }
    size_t K() const { return g_.rows(); }
    const std::string& tag() const { return tag_; }
    void set_tag(std::string t) { tag_ = std::move(t); }
    bool thick_columns_independent() const { return thick_ok_; }

    std::vector<size_t> thin_columns(std::span<const size_t> nodes) const;
    Matrix restrict(std::span<const size_t> nodes) const;
    size_t rank_of(std::span<const size_t> nodes) const;

    // message (length K) -> codeword (length n*alpha)
    std::vector<uint32_t> encode(std::span<const uint32_t> message) const;
    std::vector<uint32_t> node_content(std::span<const uint32_t> codeword, size_t node) const;

    bool operator==(const VectorCode& o) const { return alpha_ == o.alpha_ && g_ == o.g_; }

private:
    Matrix g_;
    size_t n_ = 0;
    size_t alpha_ = 1;
    std::string tag_;
    bool thick_ok_ = true;
};

// Thick-column expansion: each column of a scalar generator becomes alpha
// independent copies, i.e. G (x) I_alpha. Row (i, a) -> i*alpha + a.
Matrix expand_columns(const Matrix& g, size_t alpha);

enum class LocalityKind { Information, AllSymbol };

struct LocalityStructure {
    size_t r = 0;
    size_t delta = 0;
    std::vector<std::vector<size_t>> supports;
    LocalityKind kind = LocalityKind::Information;
    bool exact = false;

    std::vector<size_t> covered() const;
};

const char* to_string(LocalityKind k);

}  // namespace lrc
