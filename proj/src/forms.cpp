#include "nil2/forms.hpp"

#include <functional>
#include <map>

#include "nil2/errors.hpp"

namespace nil2 {

AltForm::AltForm(RatMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw NonSquare("alternating form: matrix is not square");
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        if (m_(i, i) != 0)
            throw NotAlternating(i, i, "alternating form: nonzero diagonal entry at row " +
                                           std::to_string(i + 1) + ", col " +
                                           std::to_string(i + 1));
        for (std::size_t j = i + 1; j < m_.cols(); ++j)
            if (m_(i, j) != -m_(j, i))
                throw NotAlternating(i, j, "alternating form: not skew-symmetric at row " +
                                               std::to_string(i + 1) + ", col " +
                                               std::to_string(j + 1));
    }
}

AltForm AltForm::zero(std::size_t dim) { return AltForm(RatMatrix(dim, dim)); }

AltForm AltForm::restricted(const RatMatrix& basis) const {
    if (basis.rows() != dim()) throw DimensionMismatch("restricted: basis rows != dim");
    return AltForm(basis.transpose() * m_ * basis);
}

FormPencil::FormPencil(std::size_t dimV, std::vector<AltForm> coords)
    : dimV_(dimV), coords_(std::move(coords)) {
    for (const AltForm& f : coords_)
        if (f.dim() != dimV_)
            throw DimensionMismatch("form pencil: coordinate dimension mismatch");
}

RatVec FormPencil::bracket(std::size_t i, std::size_t j) const {
    RatVec w(dimW());
    for (std::size_t t = 0; t < dimW(); ++t) w[t] = coords_[t](i, j);
    return w;
}

RatVec FormPencil::bracket(const RatVec& u, const RatVec& v) const {
    if (u.size() != dimV_ || v.size() != dimV_)
        throw DimensionMismatch("bracket: vector length != dimV");
    RatVec w(dimW());
    for (std::size_t t = 0; t < dimW(); ++t) {
        Rational s = 0;
        for (std::size_t i = 0; i < dimV_; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < dimV_; ++j) {
                const Rational& m = coords_[t](i, j);
                if (m != 0 && v[j] != 0) s += u[i] * m * v[j];
            }
        }
        w[t] = s;
    }
    return w;
}

FormPencil FormPencil::principal_sub(const std::vector<std::size_t>& indices) const {
    std::vector<AltForm> sub;
    sub.reserve(coords_.size());
    for (const AltForm& f : coords_) sub.push_back(AltForm(f.matrix().principal_sub(indices)));
    return FormPencil(indices.size(), std::move(sub));
}

namespace {

Integer exact_div(const Integer& a, const Integer& b) {
    Integer q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw Error("internal: pfaffian elimination lost exact divisibility");
    return q;
}

}  // namespace

// Fraction-free skew elimination. At level k the active entries hold the
// Pfaffians of the principal submatrices spanned by the first 2k processed
// indices plus one index pair; exact divisibility by the previous pivot is
// the Pfaffian analogue of the Sylvester identity behind Bareiss.
Rational pfaffian(const AltForm& f) {
    const std::size_t n = f.dim();
    if (n == 0) return 1;
    if (n % 2 == 1) return 0;

    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) scale = lcm(scale, den(f(i, j)));

    std::vector<std::vector<Integer>> p(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p[i][j] = num(f(i, j) * Rational(scale));

    int sign = 1;
    Integer prev = 1;
    auto swap_index = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(p[a], p[b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(p[i][a], p[i][b]);
        sign = -sign;
    };

    for (std::size_t base = 0; base + 2 < n; base += 2) {
        if (p[base][base + 1] == 0) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = base; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (p[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) return 0;  // active block vanishes entirely
            swap_index(base, pi);
            swap_index(base + 1, pj);
        }
        const Integer pivot = p[base][base + 1];
        for (std::size_t i = base + 2; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                p[i][j] = exact_div(
                    pivot * p[i][j] - p[base][i] * p[base + 1][j] + p[base][j] * p[base + 1][i],
                    prev);
                p[j][i] = -p[i][j];
            }
        prev = pivot;
    }

    Rational result(p[n - 2][n - 1]);
    if (sign < 0) result = -result;
    Rational denom = 1;
    for (std::size_t i = 0; i < n / 2; ++i) denom *= Rational(scale);
    return result / denom;
}

AltForm contract(const FormPencil& p, const RatVec& psi) {
    if (psi.size() != p.dimW()) throw DimensionMismatch("contract: functional length != dimW");
    RatMatrix acc(p.dimV(), p.dimV());
    for (std::size_t t = 0; t < p.dimW(); ++t) {
        if (psi[t] == 0) continue;
        acc = acc + p.coord(t).matrix() * psi[t];
    }
    return AltForm(std::move(acc));
}

namespace {

// Recursive expansion over perfect matchings with degree-1 binary-form
// entries; memoized on the surviving index set.
BinaryForm pencil_pf_rec(const FormPencil& p, std::vector<std::size_t> idx,
                         std::map<std::vector<std::size_t>, BinaryForm>& memo) {
    if (idx.empty()) return BinaryForm::constant(1);
    auto it = memo.find(idx);
    if (it != memo.end()) return it->second;

    const std::size_t m = idx.size() / 2;
    BinaryForm acc(m);
    const std::size_t a = idx.front();
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
        const std::size_t b = idx[pos];
        BinaryForm entry =
            BinaryForm::linear(p.coord(0).matrix()(a, b), p.coord(1).matrix()(a, b));
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != pos) rest.push_back(idx[t]);
        BinaryForm term = entry * pencil_pf_rec(p, std::move(rest), memo);
        acc = (pos % 2 == 1) ? acc + term : acc - term;
    }
    memo.emplace(std::move(idx), acc);
    return acc;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                     std::size_t from, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = from; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, cur, i + 1, f);
        cur.pop_back();
    }
}

}  // namespace

BinaryForm pfaffian_pencil(const FormPencil& p) {
    if (p.dimW() != 2)
        throw RequiresRankTwoCenter("pfaffian_pencil: needs exactly two coordinates");
    if (p.dimV() % 2 == 1) throw OddDimension("pfaffian_pencil: odd dimension");
    std::vector<std::size_t> idx(p.dimV());
    for (std::size_t i = 0; i < p.dimV(); ++i) idx[i] = i;
    std::map<std::vector<std::size_t>, BinaryForm> memo;
    return pencil_pf_rec(p, std::move(idx), memo);
}

RankLocus rank_locus(const FormPencil& p, std::size_t k) {
    if (p.dimW() != 2) throw RequiresRankTwoCenter("rank_locus: needs dimW == 2");
    if (k % 2 == 1) throw OddK("rank_locus: k must be even");
    if (k > p.dimV()) throw DimensionMismatch("rank_locus: k exceeds dimV");

    RankLocus out;
    const std::size_t minor = k + 2;
    if (minor > p.dimV()) {
        out.all_functionals = true;  // rank can never exceed dimV
        return out;
    }

    std::vector<BinaryForm> forms;
    std::vector<std::size_t> cur;
    subsets_of_size(p.dimV(), minor, cur, 0, [&](const std::vector<std::size_t>& s) {
        BinaryForm f = pfaffian_pencil(p.principal_sub(s));
        if (!f.is_zero()) forms.push_back(std::move(f));
    });

    if (forms.empty()) {
        out.all_functionals = true;
        return out;
    }

    BinaryForm g = forms.front().normalized();
    for (std::size_t i = 1; i < forms.size() && g.degree() > 0; ++i)
        g = BinaryForm::gcd(g, forms[i]);
    out.locus_form = g;

    if (g.degree() == 0) return out;  // empty locus, even over extensions

    BinaryRoots roots = binary_rational_roots(g);
    out.points = roots.roots;
    if (roots.leftover.degree() >= 1) {
        for (const BinaryFactor& f : factor_binary(roots.leftover)) {
            out.leftover.push_back({f.form, f.multiplicity, f.certified_irreducible});
            if (!f.certified_irreducible) out.fully_resolved = false;
        }
    }

    // Re-verify every reported point against the actual rank.
    for (const auto& [point, mult] : out.points) {
        (void)mult;
        const AltForm c = contract(p, {point.a(), point.b()});
        if (rank(c.matrix()) > k)
            throw Error("internal: rank locus point failed re-verification");
    }
    return out;
}

std::size_t max_functional_rank(const FormPencil& p) {
    if (p.dimW() == 1) return rank(p.coord(0).matrix());
    if (p.dimW() != 2)
        throw CenterRankUnsupported("max_functional_rank: needs dimW <= 2");
    for (std::size_t m = p.dimV() - p.dimV() % 2; m >= 2; m -= 2) {
        bool nonzero = false;
        std::vector<std::size_t> cur;
        subsets_of_size(p.dimV(), m, cur, 0, [&](const std::vector<std::size_t>& s) {
            if (!nonzero && !pfaffian_pencil(p.principal_sub(s)).is_zero()) nonzero = true;
        });
        if (nonzero) return m;
    }
    return 0;
}

}  // namespace nil2
