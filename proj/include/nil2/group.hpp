#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nil2/forms.hpp"

namespace nil2 {

class LieElement;

// Complete nilpotent class-2 torsion-free group of finite rank in the
// pair-of-spaces model: V = group mod center, W = center, and a W-valued
// alternating bracket whose coordinate matrices are linearly independent
// (the image of the bracket spans all of W; otherwise the group splits).
class ClassTwoGroup {
public:
    const std::string& name() const { return d_->name; }
    std::size_t dimV() const { return d_->pencil.dimV(); }
    std::size_t dimW() const { return d_->pencil.dimW(); }
    const FormPencil& pencil() const { return d_->pencil; }

    RatVec bracket(const RatVec& u, const RatVec& v) const { return d_->pencil.bracket(u, v); }

    LieElement element(RatVec v, RatVec w) const;
    LieElement identity() const;
    LieElement basis_v(std::size_t i) const;  // (e_i; 0)

    // Structural equality; elements of structurally equal groups interoperate.
    bool same_group(const ClassTwoGroup& other) const {
        return d_ == other.d_ || d_->pencil == other.d_->pencil;
    }

    friend ClassTwoGroup make_group(std::string name, std::size_t dimV, std::size_t dimW,
                                    const std::vector<RatMatrix>& matrices);

private:
    struct Data {
        std::string name;
        FormPencil pencil;
    };
    explicit ClassTwoGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

// Validates and builds a group. Throws DimensionMismatch, NotAlternating
// (with the offending entry) or Decomposable (bracket image smaller than W).
ClassTwoGroup make_group(std::string name, std::size_t dimV, std::size_t dimW,
                         const std::vector<RatMatrix>& matrices);

// N(k,1): k-dimensional V, one-dimensional center, standard nonsingular
// alternating bracket with 2x2 blocks. Throws OddK unless k is even, k >= 2.
ClassTwoGroup standard_group(std::size_t k);

// Block-diagonal bracket on V_A + V_B with values in W_A + W_B.
ClassTwoGroup direct_product(const ClassTwoGroup& a, const ClassTwoGroup& b);

// Group element in Mal'tsev coordinates (v; w); coordinates are unique, so
// componentwise equality is element equality.
class LieElement {
public:
    LieElement(ClassTwoGroup group, RatVec v, RatVec w);

    const ClassTwoGroup& group() const { return group_; }
    const RatVec& v() const { return v_; }
    const RatVec& w() const { return w_; }
    bool is_identity() const { return is_zero(v_) && is_zero(w_); }

    bool operator==(const LieElement& other) const {
        return group_.same_group(other.group_) && v_ == other.v_ && w_ == other.w_;
    }

    std::string to_string() const;

private:
    ClassTwoGroup group_;
    RatVec v_, w_;
};

// Class-2 BCH product: (x.v + y.v, x.w + y.w + (1/2)[x.v, y.v]).
LieElement bch_mul(const LieElement& x, const LieElement& y);
LieElement bch_inv(const LieElement& x);
// q-th power/root: coordinates scale linearly; integer powers iterate bch_mul.
LieElement bch_pow(const LieElement& x, const Rational& q);
// x y x^-1 y^-1 via bch_mul; equals (0; [x.v, y.v]).
LieElement group_commutator(const LieElement& x, const LieElement& y);

// Homomorphism as a pair of linear maps (phi on V, psi on W) making the
// bracket diagram commute: psi([u,v]_A) = [phi u, phi v]_B.
class GroupHom {
public:
    const ClassTwoGroup& source() const { return source_; }
    const ClassTwoGroup& target() const { return target_; }
    const RatMatrix& phi() const { return phi_; }
    const RatMatrix& psi() const { return psi_; }
    bool phi_injective() const { return phi_injective_; }
    bool psi_injective() const { return psi_injective_; }
    bool injective() const { return phi_injective_ && psi_injective_; }

    LieElement apply(const LieElement& x) const;

    friend GroupHom make_hom(const ClassTwoGroup& a, const ClassTwoGroup& b,
                             const RatMatrix& phi, const RatMatrix& psi);

private:
    GroupHom(ClassTwoGroup s, ClassTwoGroup t, RatMatrix phi, RatMatrix psi, bool pi, bool si)
        : source_(std::move(s)), target_(std::move(t)), phi_(std::move(phi)),
          psi_(std::move(psi)), phi_injective_(pi), psi_injective_(si) {}
    ClassTwoGroup source_, target_;
    RatMatrix phi_, psi_;
    bool phi_injective_, psi_injective_;
};

// Validates shapes and the commuting-diagram condition on all basis pairs.
// Throws DimensionMismatch or IncompatibleHom.
GroupHom make_hom(const ClassTwoGroup& a, const ClassTwoGroup& b, const RatMatrix& phi,
                  const RatMatrix& psi);

GroupHom identity_hom(const ClassTwoGroup& a);
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

struct GradedScalingReport {
    GroupHom hom;
    bool kernels_trivial;
    bool degree_one_scales;  // every basis x_i maps to x_i^k
    bool degree_two_scales;  // every commutator maps to its k^2-th power
    Integer k;

    bool ok() const { return kernels_trivial && degree_one_scales && degree_two_scales; }
};

// Builds the scaling hom (phi = k id, psi = k^2 id), checks it is a valid
// injective hom, and verifies the graded action degree by degree.
GradedScalingReport graded_scaling_check(const ClassTwoGroup& a, const Integer& k);

}  // namespace nil2
