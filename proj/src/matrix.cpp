#include "lrc/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lrc {

namespace {

// Gauss-Jordan on a row-major buffer. Only the first `limit` columns are
// eligible as pivots. With full=false only rows below the pivot are cleared.
std::vector<size_t> eliminate(const Field& f, std::vector<uint32_t>& a, size_t rows, size_t cols, size_t limit,
                              bool full) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < limit && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols, a.begin() + r * cols);
        uint32_t* pr = a.data() + r * cols;
        uint32_t iv = f.inv(pr[c]);
        if (full && pr[c] != 1)
            for (size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], iv);
        for (size_t i = full ? 0 : r + 1; i < rows; ++i) {
            if (i == r) continue;
            uint32_t* ri = a.data() + i * cols;
            if (ri[c] == 0) continue;
            uint32_t factor = full ? ri[c] : f.mul(ri[c], iv);
            for (size_t j = c; j < cols; ++j)
                if (pr[j]) ri[j] = f.sub(ri[j], f.mul(factor, pr[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(Field f, size_t rows, size_t cols) : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(Field f, size_t rows, size_t cols, std::vector<uint32_t> data)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(data)) {
    if (a_.size() != rows * cols) throw Error(Errc::ShapeMismatch, "data length does not match shape");
    for (uint32_t v : a_)
        if (v >= f_.order()) throw Error(Errc::PreconditionViolated, "entry out of range for " + f_.name());
}

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<uint32_t>>& rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    std::vector<uint32_t> data;
    for (const auto& r : rows) {
        if (r.size() != nc) throw Error(Errc::ShapeMismatch, "ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(f, rows.size(), nc, std::move(data));
}

void Matrix::set(size_t r, size_t c, const Element& e) {
    if (e.field() != f_) throw Error(Errc::FieldMismatch, e.field().name() + " vs " + f_.name());
    (*this)(r, c) = e.value();
}

void Matrix::check_same(const Matrix& o) const {
    if (f_ != o.f_) throw Error(Errc::FieldMismatch, f_.name() + " vs " + o.f_.name());
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same(o);
    if (cols_ != o.rows_) throw Error(Errc::ShapeMismatch, "product of incompatible shapes");
    Matrix out(f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t x = (*this)(i, k);
            if (!x) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                if (uint32_t y = o(k, j)) out(i, j) = f_.add(out(i, j), f_.mul(x, y));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "sum of different shapes");
    Matrix out(*this);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], o.a_[i]);
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::select_columns(std::span<const size_t> cols) const {
    Matrix out(f_, rows_, cols.size());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw Error(Errc::ShapeMismatch, "column index out of range");
            out(i, j) = (*this)(i, cols[j]);
        }
    return out;
}

Matrix Matrix::select_rows(std::span<const size_t> rows) const {
    Matrix out(f_, rows.size(), cols_);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_) throw Error(Errc::ShapeMismatch, "row index out of range");
        std::copy(row(rows[i]).begin(), row(rows[i]).end(), out.row(i).begin());
    }
    return out;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(Errc::ShapeMismatch, "block out of range");
    Matrix out(f_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Matrix::paste(size_t r0, size_t c0, const Matrix& b) {
    check_same(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(Errc::ShapeMismatch, "paste out of range");
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

size_t Matrix::rank() const {
    if (empty()) return 0;
    // eliminate along the shorter dimension
    if (rows_ > cols_) return transpose().rank();
    std::vector<uint32_t> a = a_;
    return eliminate(f_, a, rows_, cols_, cols_, false).size();
}

Matrix::Rref Matrix::rref() const {
    std::vector<uint32_t> a = a_;
    auto piv = eliminate(f_, a, rows_, cols_, cols_, true);
    return {Matrix(f_, rows_, cols_, std::move(a)), std::move(piv)};
}

Matrix Matrix::nullspace() const {
    auto [r, piv] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : piv) is_pivot[c] = true;
    Matrix out(f_, cols_ - piv.size(), cols_);
    size_t k = 0;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        out(k, fc) = 1;
        for (size_t i = 0; i < piv.size(); ++i) out(k, piv[i]) = f_.neg(r(i, fc));
        ++k;
    }
    return out;
}

std::vector<size_t> Matrix::independent_rows() const {
    std::vector<std::vector<uint32_t>> basis;
    std::vector<size_t> lead;
    std::vector<size_t> out;
    for (size_t i = 0; i < rows_; ++i) {
        std::vector<uint32_t> v(row(i).begin(), row(i).end());
        for (size_t b = 0; b < basis.size(); ++b) {
            uint32_t x = v[lead[b]];
            if (!x) continue;
            for (size_t j = lead[b]; j < cols_; ++j) v[j] = f_.sub(v[j], f_.mul(x, basis[b][j]));
        }
        size_t c = 0;
        while (c < cols_ && v[c] == 0) ++c;
        if (c == cols_) continue;
        uint32_t iv = f_.inv(v[c]);
        for (size_t j = c; j < cols_; ++j) v[j] = f_.mul(v[j], iv);
        basis.push_back(std::move(v));
        lead.push_back(c);
        out.push_back(i);
    }
    return out;
}

Matrix Matrix::solve(const Matrix& b) const {
    check_same(b);
    if (b.rows_ != rows_) throw Error(Errc::ShapeMismatch, "right-hand side row count differs");
    const size_t w = cols_ + b.cols_;
    std::vector<uint32_t> a(rows_ * w);
    for (size_t i = 0; i < rows_; ++i) {
        std::copy(row(i).begin(), row(i).end(), a.begin() + i * w);
        std::copy(b.row(i).begin(), b.row(i).end(), a.begin() + i * w + cols_);
    }
    auto piv = eliminate(f_, a, rows_, w, cols_, true);
    for (size_t i = piv.size(); i < rows_; ++i)
        for (size_t j = cols_; j < w; ++j)
            if (a[i * w + j]) throw Error(Errc::NoSolution, "inconsistent linear system");
    Matrix x(f_, cols_, b.cols_);
    for (size_t i = 0; i < piv.size(); ++i)
        for (size_t j = 0; j < b.cols_; ++j) x(piv[i], j) = a[i * w + cols_ + j];
    return x;
}

uint32_t Matrix::det() const {
    if (rows_ != cols_) throw Error(Errc::ShapeMismatch, "determinant of non-square matrix");
    std::vector<uint32_t> a = a_;
    const size_t n = rows_;
    uint32_t d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p * n + c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap_ranges(a.begin() + p * n, a.begin() + (p + 1) * n, a.begin() + c * n);
            d = f_.neg(d);
        }
        uint32_t pv = a[c * n + c];
        d = f_.mul(d, pv);
        uint32_t iv = f_.inv(pv);
        for (size_t i = c + 1; i < n; ++i) {
            uint32_t x = a[i * n + c];
            if (!x) continue;
            uint32_t factor = f_.mul(x, iv);
            for (size_t j = c; j < n; ++j) a[i * n + j] = f_.sub(a[i * n + j], f_.mul(factor, a[c * n + j]));
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error(Errc::ShapeMismatch, "inverse of non-square matrix");
    const size_t n = rows_, w = 2 * n;
    std::vector<uint32_t> a(n * w, 0);
    for (size_t i = 0; i < n; ++i) {
        std::copy(row(i).begin(), row(i).end(), a.begin() + i * w);
        a[i * w + n + i] = 1;
    }
    auto piv = eliminate(f_, a, n, w, n, true);
    if (piv.size() < n) throw Error(Errc::SingularMatrix, "matrix is singular");
    Matrix out(f_, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = a[i * w + n + j];
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << '\n';
    }
    return os.str();
}

Matrix hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw Error(Errc::ShapeMismatch, "nothing to stack");
    size_t nc = 0;
    for (const auto& p : parts) {
        if (p.rows() != parts[0].rows()) throw Error(Errc::ShapeMismatch, "hstack row counts differ");
        nc += p.cols();
    }
    Matrix out(parts[0].field(), parts[0].rows(), nc);
    size_t c = 0;
    for (const auto& p : parts) {
        out.paste(0, c, p);
        c += p.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw Error(Errc::ShapeMismatch, "nothing to stack");
    size_t nr = 0;
    for (const auto& p : parts) {
        if (p.cols() != parts[0].cols()) throw Error(Errc::ShapeMismatch, "vstack column counts differ");
        nr += p.rows();
    }
    Matrix out(parts[0].field(), nr, parts[0].cols());
    size_t r = 0;
    for (const auto& p : parts) {
        out.paste(r, 0, p);
        r += p.rows();
    }
    return out;
}

Matrix block_diag(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw Error(Errc::ShapeMismatch, "nothing to stack");
    size_t nr = 0, nc = 0;
    for (const auto& p : parts) {
        nr += p.rows();
        nc += p.cols();
    }
    Matrix out(parts[0].field(), nr, nc);
    size_t r = 0, c = 0;
    for (const auto& p : parts) {
        out.paste(r, c, p);
        r += p.rows();
        c += p.cols();
    }
    return out;
}

Matrix vandermonde(const Field& f, size_t rows, std::span<const uint32_t> points) {
    std::set<uint32_t> seen;
    for (uint32_t x : points) {
        if (x >= f.order()) throw Error(Errc::PreconditionViolated, "evaluation point out of range");
        if (!seen.insert(x).second) throw Error(Errc::DuplicatePoints, "evaluation points must be distinct");
    }
    Matrix v(f, rows, points.size());
    for (size_t j = 0; j < points.size(); ++j) {
        uint32_t x = 1;
        for (size_t i = 0; i < rows; ++i) {
            v(i, j) = x;
            x = f.mul(x, points[j]);
        }
    }
    return v;
}

std::vector<uint32_t> vec_mul(std::span<const uint32_t> v, const Matrix& m) {
    if (v.size() != m.rows()) throw Error(Errc::ShapeMismatch, "vector length does not match matrix rows");
    const Field& f = m.field();
    std::vector<uint32_t> out(m.cols(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        auto r = m.row(i);
        for (size_t j = 0; j < out.size(); ++j)
            if (r[j]) out[j] = f.add(out[j], f.mul(v[i], r[j]));
    }
    return out;
}

}  // namespace lrc
