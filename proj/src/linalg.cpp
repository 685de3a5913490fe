#include "nil2/linalg.hpp"

#include "nil2/errors.hpp"

namespace nil2 {

namespace {

using IntRow = std::vector<Integer>;
using IntMat = std::vector<IntRow>;

// Scale each row by the lcm of its denominators. Row scaling by a positive
// rational preserves row space, pivot columns and the reduced echelon form.
IntMat clear_denominators(const RatMatrix& m, std::vector<Integer>* scales = nullptr) {
    IntMat b(m.rows(), IntRow(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
        if (scales) scales->push_back(l);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational v = m(i, j) * Rational(l);
            b[i][j] = num(v);
        }
    }
    return b;
}

Integer exact_div(const Integer& a, const Integer& b) {
    Integer q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw Error("internal: fraction-free elimination lost exact divisibility");
    return q;
}

// Fraction-free forward elimination with first-nonzero pivoting. Returns the
// echelon matrix in place; reports pivot columns and the row-swap sign.
std::vector<std::size_t> bareiss_forward(IntMat& b, int* sign_out = nullptr) {
    const std::size_t rows = b.size();
    const std::size_t cols = rows == 0 ? 0 : b.front().size();
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && b[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            std::swap(b[pr], b[r]);
            sign = -sign;
        }
        const Integer pivot = b[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                b[i][j] = exact_div(pivot * b[i][j] - b[i][c] * b[r][j], prev);
            b[i][c] = 0;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    if (sign_out) *sign_out = sign;
    return pivots;
}

}  // namespace

RrefResult rref(const RatMatrix& m) {
    IntMat b = clear_denominators(m);
    const std::vector<std::size_t> pivots = bareiss_forward(b);

    // Back substitution over Q: scale pivot rows to 1, clear entries above.
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(b[i][j]);
    for (std::size_t t = pivots.size(); t-- > 0;) {
        const std::size_t pc = pivots[t];
        const Rational p = r(t, pc);
        for (std::size_t j = pc; j < m.cols(); ++j) r(t, j) = r(t, j) / p;
        for (std::size_t i = 0; i < t; ++i) {
            const Rational f = r(i, pc);
            if (f == 0) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) r(i, j) -= f * r(t, j);
        }
    }
    return {std::move(r), pivots};
}

std::size_t rank(const RatMatrix& m) {
    IntMat b = clear_denominators(m);
    return bareiss_forward(b).size();
}

RatMatrix kernel(const RatMatrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols());
        v[f] = 1;
        for (std::size_t t = 0; t < rr.pivots.size(); ++t) v[rr.pivots[t]] = -rr.rref(t, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return RatMatrix(m.cols(), 0);
    return RatMatrix::from_columns(basis);
}

Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw NonSquare("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    std::vector<Integer> scales;
    IntMat b = clear_denominators(m, &scales);
    int sign = 1;
    const std::vector<std::size_t> pivots = bareiss_forward(b, &sign);
    if (pivots.size() < n) return 0;
    // After full elimination the last pivot equals det of the integer matrix.
    Rational d(b[n - 1][n - 1]);
    for (const Integer& s : scales) d /= Rational(s);
    return sign < 0 ? -d : d;
}

std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& rhs) {
    if (m.rows() != rhs.rows()) throw DimensionMismatch("solve: row counts differ");
    const RrefResult rr = rref(RatMatrix::hstack(m, rhs));
    for (std::size_t c : rr.pivots)
        if (c >= m.cols()) return std::nullopt;  // inconsistent system
    RatMatrix x(m.cols(), rhs.cols());
    for (std::size_t t = 0; t < rr.pivots.size(); ++t)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x(rr.pivots[t], j) = rr.rref(t, m.cols() + j);
    return x;
}

}  // namespace nil2
