#include "nil2/group.hpp"

#include "nil2/errors.hpp"

namespace nil2 {

ClassTwoGroup make_group(std::string name, std::size_t dimV, std::size_t dimW,
                         const std::vector<RatMatrix>& matrices) {
    if (dimW == 0)
        throw DimensionMismatch("group '" + name + "': dimW must be positive (abelian groups are outside the model)");
    if (matrices.size() != dimW)
        throw DimensionMismatch("group '" + name + "': expected dimW bracket matrices");
    std::vector<AltForm> coords;
    coords.reserve(dimW);
    for (std::size_t t = 0; t < matrices.size(); ++t) {
        const RatMatrix& m = matrices[t];
        if (m.rows() != dimV || m.cols() != dimV)
            throw DimensionMismatch("group '" + name + "': bracket matrix is not dimV x dimV");
        try {
            coords.push_back(AltForm(m));
        } catch (const NotAlternating& e) {
            throw NotAlternating(e.row, e.col, "group '" + name + "', bracket block " +
                                                   std::to_string(t + 1) + ": " + e.what());
        }
    }

    // Image condition: the bracket values span W iff the coordinate matrices
    // are linearly independent. Flatten and compute the rank.
    RatMatrix flat(dimW, dimV * dimV);
    for (std::size_t t = 0; t < dimW; ++t)
        for (std::size_t i = 0; i < dimV; ++i)
            for (std::size_t j = 0; j < dimV; ++j) flat(t, i * dimV + j) = matrices[t](i, j);
    if (rank(flat) != dimW)
        throw Decomposable("group '" + name +
                           "': bracket image does not span the center; the group splits off a direct factor");

    auto data = std::make_shared<const ClassTwoGroup::Data>(
        ClassTwoGroup::Data{std::move(name), FormPencil(dimV, std::move(coords))});
    return ClassTwoGroup(std::move(data));
}

ClassTwoGroup standard_group(std::size_t k) {
    if (k < 2 || k % 2 == 1) throw OddK("standard group N(k,1) needs even k >= 2");
    RatMatrix s(k, k);
    for (std::size_t i = 0; i + 1 < k; i += 2) {
        s(i, i + 1) = 1;
        s(i + 1, i) = -1;
    }
    return make_group("N(" + std::to_string(k) + ",1)", k, 1, {s});
}

ClassTwoGroup direct_product(const ClassTwoGroup& a, const ClassTwoGroup& b) {
    const std::size_t dimV = a.dimV() + b.dimV();
    std::vector<RatMatrix> coords;
    for (std::size_t t = 0; t < a.dimW(); ++t)
        coords.push_back(RatMatrix::block_diag(a.pencil().coord(t).matrix(),
                                               RatMatrix(b.dimV(), b.dimV())));
    for (std::size_t t = 0; t < b.dimW(); ++t)
        coords.push_back(RatMatrix::block_diag(RatMatrix(a.dimV(), a.dimV()),
                                               b.pencil().coord(t).matrix()));
    return make_group(a.name() + "x" + b.name(), dimV, a.dimW() + b.dimW(), coords);
}

LieElement ClassTwoGroup::element(RatVec v, RatVec w) const {
    return LieElement(*this, std::move(v), std::move(w));
}

LieElement ClassTwoGroup::identity() const {
    return LieElement(*this, RatVec(dimV()), RatVec(dimW()));
}

LieElement ClassTwoGroup::basis_v(std::size_t i) const {
    RatVec v(dimV());
    v.at(i) = 1;
    return LieElement(*this, std::move(v), RatVec(dimW()));
}

LieElement::LieElement(ClassTwoGroup group, RatVec v, RatVec w)
    : group_(std::move(group)), v_(std::move(v)), w_(std::move(w)) {
    if (v_.size() != group_.dimV() || w_.size() != group_.dimW())
        throw DimensionMismatch("element coordinates do not match the group dimensions");
}

std::string LieElement::to_string() const {
    return nil2::to_string(v_) + " | " + nil2::to_string(w_);
}

namespace {
void require_same_group(const LieElement& x, const LieElement& y, const char* op) {
    if (!x.group().same_group(y.group()))
        throw GroupMismatch(std::string(op) + ": elements belong to different groups");
}
}  // namespace

LieElement bch_mul(const LieElement& x, const LieElement& y) {
    require_same_group(x, y, "bch_mul");
    const RatVec half_bracket = Rational(1, 2) * x.group().bracket(x.v(), y.v());
    return LieElement(x.group(), x.v() + y.v(), x.w() + y.w() + half_bracket);
}

LieElement bch_inv(const LieElement& x) { return bch_pow(x, -1); }

LieElement bch_pow(const LieElement& x, const Rational& q) {
    return LieElement(x.group(), q * x.v(), q * x.w());
}

LieElement group_commutator(const LieElement& x, const LieElement& y) {
    require_same_group(x, y, "group_commutator");
    return bch_mul(bch_mul(bch_mul(x, y), bch_inv(x)), bch_inv(y));
}

GroupHom make_hom(const ClassTwoGroup& a, const ClassTwoGroup& b, const RatMatrix& phi,
                  const RatMatrix& psi) {
    if (phi.rows() != b.dimV() || phi.cols() != a.dimV())
        throw DimensionMismatch("make_hom: phi must be dimV_B x dimV_A");
    if (psi.rows() != b.dimW() || psi.cols() != a.dimW())
        throw DimensionMismatch("make_hom: psi must be dimW_B x dimW_A");

    // psi([e_i, e_j]_A) = [phi e_i, phi e_j]_B on all basis pairs; bilinearity
    // extends this to arbitrary vectors.
    for (std::size_t i = 0; i < a.dimV(); ++i) {
        const RatVec phi_i = phi.col_vec(i);
        for (std::size_t j = i + 1; j < a.dimV(); ++j) {
            const RatVec lhs = psi * a.pencil().bracket(i, j);
            const RatVec rhs = b.bracket(phi_i, phi.col_vec(j));
            if (lhs != rhs)
                throw IncompatibleHom("make_hom: bracket diagram fails on basis pair (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    const bool phi_inj = kernel(phi).cols() == 0;
    const bool psi_inj = kernel(psi).cols() == 0;
    return GroupHom(a, b, phi, psi, phi_inj, psi_inj);
}

LieElement GroupHom::apply(const LieElement& x) const {
    if (!x.group().same_group(source_))
        throw GroupMismatch("hom applied to an element of a different group");
    return LieElement(target_, phi_ * x.v(), psi_ * x.w());
}

GroupHom identity_hom(const ClassTwoGroup& a) {
    return make_hom(a, a, RatMatrix::identity(a.dimV()), RatMatrix::identity(a.dimW()));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    if (!inner.target().same_group(outer.source()))
        throw GroupMismatch("compose: inner target differs from outer source");
    return make_hom(inner.source(), outer.target(), outer.phi() * inner.phi(),
                    outer.psi() * inner.psi());
}

GradedScalingReport graded_scaling_check(const ClassTwoGroup& a, const Integer& k) {
    const Rational kq(k);
    GroupHom hom = make_hom(a, a, RatMatrix::identity(a.dimV()) * kq,
                            RatMatrix::identity(a.dimW()) * (kq * kq));

    bool deg1 = true, deg2 = true;
    for (std::size_t i = 0; i < a.dimV(); ++i) {
        const LieElement xi = a.basis_v(i);
        if (!(hom.apply(xi) == bch_pow(xi, kq))) deg1 = false;
        for (std::size_t j = i + 1; j < a.dimV(); ++j) {
            const LieElement c = group_commutator(xi, a.basis_v(j));
            if (!(hom.apply(c) == bch_pow(c, kq * kq))) deg2 = false;
        }
    }
    return GradedScalingReport{hom, hom.injective(), deg1, deg2, k};
}

}  // namespace nil2
