#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nil2/matrix.hpp"

namespace nil2 {

struct RrefResult {
    RatMatrix rref;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

// Reduced row-echelon form and pivot columns. The forward phase runs
// fraction-free (Bareiss) on a denominator-cleared integer copy; the final
// normalization divides back to lowest-terms rationals. Deterministic.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Columns form a basis of the null space (empty matrix for full column rank).
RatMatrix kernel(const RatMatrix& m);

// Exact determinant by fraction-free elimination. Throws NonSquare.
Rational det(const RatMatrix& m);

// One exact solution of m*x = rhs (rhs may have several columns), or nullopt
// when the system is inconsistent. Throws DimensionMismatch on row counts.
std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& rhs);

}  // namespace nil2
