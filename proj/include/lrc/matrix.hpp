#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, size_t rows, size_t cols);
    Matrix(Field f, size_t rows, size_t cols, std::vector<uint32_t> data);

    static Matrix identity(const Field& f, size_t n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<uint32_t>>& rows);

    const Field& field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    uint32_t& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    Element at(size_t r, size_t c) const { return Element(f_, (*this)(r, c)); }
    void set(size_t r, size_t c, const Element& e);

    std::span<uint32_t> row(size_t r) { return {a_.data() + r * cols_, cols_}; }
    std::span<const uint32_t> row(size_t r) const { return {a_.data() + r * cols_, cols_}; }
    const std::vector<uint32_t>& data() const { return a_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix select_columns(std::span<const size_t> cols) const;
    Matrix select_rows(std::span<const size_t> rows) const;
    Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void paste(size_t r0, size_t c0, const Matrix& b);

    size_t rank() const;

    struct Rref;
    Rref rref() const;

    // Basis (as rows) of {x : M x = 0}.
    Matrix nullspace() const;
    // Basis (as rows) of {y : y M = 0}.
    Matrix left_nullspace() const { return transpose().nullspace(); }
    // Indices of a maximal set of linearly independent rows, greedy in order.
    std::vector<size_t> independent_rows() const;

    // X with (*this) X = B.
    Matrix solve(const Matrix& b) const;
    uint32_t det() const;
    Matrix inverse() const;

    std::string to_string() const;

private:
    void check_same(const Matrix& o) const;

    Field f_;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<uint32_t> a_;
};

struct Matrix::Rref {
    Matrix reduced;
    std::vector<size_t> pivots;  // pivot column of each nonzero row
};

Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix block_diag(const std::vector<Matrix>& parts);

// Entry (i, j) = points[j]^i.
Matrix vandermonde(const Field& f, size_t rows, std::span<const uint32_t> points);

// Row vector times matrix.
std::vector<uint32_t> vec_mul(std::span<const uint32_t> v, const Matrix& m);

}  // namespace lrc
