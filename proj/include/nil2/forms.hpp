#pragma once

#include <string>
#include <vector>

#include "nil2/binary_form.hpp"
#include "nil2/linalg.hpp"
#include "nil2/matrix.hpp"

namespace nil2 {

// Alternating bilinear form on Q^dim: skew-symmetric matrix, zero diagonal.
class AltForm {
public:
    explicit AltForm(RatMatrix m);  // throws NotAlternating / NonSquare
    static AltForm zero(std::size_t dim);

    std::size_t dim() const { return m_.rows(); }
    const RatMatrix& matrix() const { return m_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    // Gram matrix of the form restricted to the span of `basis` columns.
    AltForm restricted(const RatMatrix& basis) const;

    bool operator==(const AltForm& other) const = default;

private:
    RatMatrix m_;
};

// dimW-tuple of alternating forms on a common dimV-space: the coordinates of
// a W-valued bracket in a fixed basis of W.
class FormPencil {
public:
    FormPencil(std::size_t dimV, std::vector<AltForm> coords);  // throws on dim mismatch

    std::size_t dimV() const { return dimV_; }
    std::size_t dimW() const { return coords_.size(); }
    const AltForm& coord(std::size_t j) const { return coords_[j]; }
    const std::vector<AltForm>& coords() const { return coords_; }

    // Bracket value of basis vectors / arbitrary vectors, as a W-coordinate vector.
    RatVec bracket(std::size_t i, std::size_t j) const;
    RatVec bracket(const RatVec& u, const RatVec& v) const;

    // Pencil restricted to the rows/columns in `indices`.
    FormPencil principal_sub(const std::vector<std::size_t>& indices) const;

    bool operator==(const FormPencil& other) const = default;

private:
    std::size_t dimV_;
    std::vector<AltForm> coords_;
};

// Exact Pfaffian. Zero for odd dimension by convention; pfaffian(f)^2 = det.
Rational pfaffian(const AltForm& f);

// The functional psi (length dimW) applied to the pencil: sum psi_j * coord_j.
AltForm contract(const FormPencil& p, const RatVec& psi);

// Pfaffian of the symbolic combination l1*M1 + l2*M2 as a binary form of
// degree dimV/2, expanded by multilinearity over the two coordinates.
// Requires dimW == 2 (RequiresRankTwoCenter) and even dimV (OddDimension).
BinaryForm pfaffian_pencil(const FormPencil& p);

struct LocusFactor {
    BinaryForm form;
    int multiplicity;
    bool certified_irreducible;
};

// Functionals psi (up to scalar) with rank(contract(p, psi)) <= k, cut out by
// the principal (k+2)-Pfaffian minors of the symbolic pencil.
struct RankLocus {
    bool all_functionals = false;              // every functional has rank <= k
    std::vector<BinaryRoot> points;            // complete list of rational locus points
    std::vector<LocusFactor> leftover;         // non-linear factors (no rational roots)
    BinaryForm locus_form = BinaryForm::constant(1);  // gcd of the minor forms
    bool fully_resolved = true;                // false iff some leftover factor is uncertified

    bool no_points_at_all() const { return !all_functionals && points.empty() && leftover.empty(); }
};

// Requires dimW == 2 and even k with 0 <= k <= dimV. Every reported point is
// re-verified by evaluating the rank of the contracted form.
RankLocus rank_locus(const FormPencil& p, std::size_t k);

// Largest rank attained by contract(p, psi) over rational functionals psi
// (0 if every contraction vanishes). Supports dimW == 1 and dimW == 2.
std::size_t max_functional_rank(const FormPencil& p);

}  // namespace nil2
