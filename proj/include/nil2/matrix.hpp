#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nil2/rational.hpp"

namespace nil2 {

using RatVec = std::vector<Rational>;

// Dense matrix over Q with value semantics. All linear-algebra operations
// treat matrices as immutable and return fresh values; operator()(i,j) is
// mutable only so builders can fill entries.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static RatMatrix column(const RatVec& v);
    static RatMatrix row(const RatVec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    bool operator==(const RatMatrix& other) const = default;

    RatMatrix transpose() const;
    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix operator-() const;
    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator*(const Rational& s) const;

    RatMatrix sub(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    // Restriction to the rows and columns named by `indices` (in order).
    RatMatrix principal_sub(const std::vector<std::size_t>& indices) const;
    RatMatrix col(std::size_t j) const;
    RatVec col_vec(std::size_t j) const;
    RatVec row_vec(std::size_t i) const;

    static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
    static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
    static RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);
    static RatMatrix from_columns(const std::vector<RatVec>& cols);

    bool is_zero() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

RatVec operator*(const RatMatrix& m, const RatVec& v);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& v);
bool is_zero(const RatVec& v);
Rational dot(const RatVec& a, const RatVec& b);
std::string to_string(const RatVec& v);

}  // namespace nil2
