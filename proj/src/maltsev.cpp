#include "nil2/maltsev.hpp"

#include <map>

#include "nil2/errors.hpp"

namespace nil2 {

namespace {
ClassTwoGroup build_free(std::size_t n) {
    if (n < 2) throw TooFewGenerators("free class-2 group needs at least 2 generators");
    const std::size_t dimW = n * (n - 1) / 2;
    std::vector<RatMatrix> coords;
    coords.reserve(dimW);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RatMatrix m(n, n);
            m(i, j) = 1;
            m(j, i) = -1;
            coords.push_back(std::move(m));
        }
    return make_group("F2(" + std::to_string(n) + ")", n, dimW, coords);
}
}  // namespace

FreeClassTwo::FreeClassTwo(std::size_t n) : n_(n), g_(build_free(n)) {}

FreeClassTwo free_group(std::size_t n) { return FreeClassTwo(n); }

LieElement FreeClassTwo::generator(std::size_t i) const { return g_.basis_v(i); }

LieElement FreeClassTwo::central_basis(std::size_t i, std::size_t j) const {
    RatVec w(g_.dimW());
    w.at(pair_index(i, j)) = 1;
    return g_.element(RatVec(g_.dimV()), std::move(w));
}

std::size_t FreeClassTwo::pair_index(std::size_t i, std::size_t j) const {
    if (i >= j || j >= n_) throw DimensionMismatch("pair_index: need i < j < n");
    // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in lexicographic order
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> FreeClassTwo::pair_at(std::size_t t) const {
    for (std::size_t i = 0, base = 0; i + 1 < n_; ++i) {
        const std::size_t row = n_ - i - 1;
        if (t < base + row) return {i, i + 1 + (t - base)};
        base += row;
    }
    throw DimensionMismatch("pair_at: index out of range");
}

LieElement eval_word(const FreeClassTwo& f, const Word& word) {
    LieElement acc = f.group().identity();
    for (const WordLetter& letter : word) {
        LieElement base = letter.kind == WordLetter::Kind::Generator
                              ? f.generator(letter.i)
                              : f.central_basis(letter.i, letter.j);
        acc = bch_mul(acc, bch_pow(base, letter.exponent));
    }
    return acc;
}

std::string word_to_string(const Word& word) {
    if (word.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (t) s += "*";
        const WordLetter& l = word[t];
        if (l.kind == WordLetter::Kind::Generator)
            s += "x" + std::to_string(l.i + 1);
        else
            s += "c(" + std::to_string(l.i + 1) + "," + std::to_string(l.j + 1) + ")";
        if (l.exponent != 1) s += "^(" + to_string(l.exponent) + ")";
    }
    return s;
}

std::optional<LatticeWitness> hk_membership(const FreeClassTwo& f, const LieElement& g,
                                            const Integer& k) {
    if (!g.group().same_group(f.group()))
        throw GroupMismatch("hk_membership: element not in the free group's completion");
    if (k < 1) throw Error("hk_membership: k must be a positive integer");

    const std::size_t n = f.generator_count();
    const Rational kq(k);

    // v must lie in (1/k)Z^n.
    for (const Rational& vi : g.v())
        if (!is_integer(vi * kq)) return std::nullopt;

    // Central residual after the canonical generator word x_1^{v_1}...x_n^{v_n},
    // whose w-part is (1/2) v_i v_j per pair: must lie in (1/k^2)Z.
    RatVec residual(g.w().size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t t = f.pair_index(i, j);
            residual[t] = g.w()[t] - Rational(1, 2) * g.v()[i] * g.v()[j];
            if (!is_integer(residual[t] * kq * kq)) return std::nullopt;
        }

    Word expr;
    for (std::size_t i = 0; i < n; ++i)
        if (g.v()[i] != 0)
            expr.push_back({WordLetter::Kind::Generator, i, 0, g.v()[i]});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational& r = residual[f.pair_index(i, j)];
            if (r != 0) expr.push_back({WordLetter::Kind::Central, i, j, r});
        }
    return LatticeWitness{g, k, std::move(expr)};
}

Integer lemma_bound(const FreeClassTwo& f, const std::vector<LieElement>& generators) {
    // Exact prime-by-prime bound: need ord_p(k) >= ord_p(den v_i) and
    // 2 ord_p(k) >= ord_p(den(w_ij - v_i v_j / 2)). The result divides every
    // k that works, hence also the product of word-letter denominators.
    std::map<Integer, unsigned> exponents;
    const std::size_t n = f.generator_count();
    for (const LieElement& g : generators) {
        if (!g.group().same_group(f.group()))
            throw GroupMismatch("lemma_bound: element not in the free group's completion");
        for (const Rational& vi : g.v())
            for (const auto& [p, e] : factorize(den(vi)))
                exponents[p] = std::max(exponents[p], e);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Rational r =
                    g.w()[f.pair_index(i, j)] - Rational(1, 2) * g.v()[i] * g.v()[j];
                for (const auto& [p, e] : factorize(den(r)))
                    exponents[p] = std::max(exponents[p], (e + 1) / 2);
            }
    }
    Integer k = 1;
    for (const auto& [p, e] : exponents)
        for (unsigned t = 0; t < e; ++t) k *= p;
    return k;
}

GroupHom root_endomorphism(const FreeClassTwo& f, const Integer& k) {
    if (k < 1) throw Error("root_endomorphism: k must be a positive integer");
    const Rational kq(k);
    const ClassTwoGroup& g = f.group();
    GroupHom hom = make_hom(g, g, RatMatrix::identity(g.dimV()) * kq,
                            RatMatrix::identity(g.dimW()) * (kq * kq));
    if (!hom.injective()) throw Error("internal: scaling endomorphism must be injective");

    // Spot-check that H_k lands inside the integral subgroup H_1.
    const std::size_t n = f.generator_count();
    std::vector<LieElement> samples;
    for (std::size_t i = 0; i < n; ++i) samples.push_back(bch_pow(f.generator(i), 1 / kq));
    for (std::size_t i = 0; i + 1 < n; ++i)
        samples.push_back(bch_mul(samples[i], samples[i + 1]));
    for (const LieElement& s : samples)
        if (!hk_membership(f, hom.apply(s), 1))
            throw Error("internal: image of an H_k sample left the integral subgroup");
    return hom;
}

}  // namespace nil2
