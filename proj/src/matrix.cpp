#include "nil2/matrix.hpp"

#include <sstream>

#include "nil2/errors.hpp"

namespace nil2 {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Rational>> converted;
    for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
    return from_rows(converted);
}

RatMatrix RatMatrix::column(const RatVec& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

RatMatrix RatMatrix::row(const RatVec& v) {
    RatMatrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix addition: shape mismatch");
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + other.e_[i];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix subtraction: shape mismatch");
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - other.e_[i];
    return m;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product: inner dims differ");
    RatMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) m(i, j) += a * other(k, j);
        }
    return m;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
    return m;
}

RatMatrix RatMatrix::sub(std::size_t r0, std::size_t c0, std::size_t nrows,
                         std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionMismatch("sub: out of range");
    RatMatrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

RatMatrix RatMatrix::principal_sub(const std::vector<std::size_t>& indices) const {
    RatMatrix m(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j)
            m(i, j) = (*this)(indices[i], indices[j]);
    return m;
}

RatMatrix RatMatrix::col(std::size_t j) const { return sub(0, j, rows_, 1); }

RatVec RatMatrix::col_vec(std::size_t j) const {
    RatVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatVec RatMatrix::row_vec(std::size_t i) const {
    RatVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

RatMatrix RatMatrix::hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    RatMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

RatMatrix RatMatrix::block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols) {
    const std::size_t c = cols.size();
    const std::size_t r = c == 0 ? 0 : cols.front().size();
    RatMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw DimensionMismatch("from_columns: ragged column lengths");
        for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << nil2::to_string((*this)(i, j));
        }
        os << '\n';
    }
    return os.str();
}

RatVec operator*(const RatMatrix& m, const RatVec& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector product: dims differ");
    RatVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector addition: lengths differ");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector subtraction: lengths differ");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec operator*(const Rational& s, const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: lengths differ");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace nil2
