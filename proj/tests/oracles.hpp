#pragma once

// Test-only oracles and generators. Everything here is deliberately
// independent of the elimination paths used by the library: determinants by
// permutation expansion, pfaffians by the matching sum, ranks by minor
// enumeration, witnesses by exhaustive small-coordinate search.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "nil2/group.hpp"
#include "nil2/linalg.hpp"

namespace nil2::testing {

inline Rational perm_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Rational acc = 0;
    do {
        // sign by inversion count
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Pfaffian as the signed sum over perfect matchings, via expansion along the
// first remaining index.
inline Rational matching_pfaffian_rec(const RatMatrix& m, std::vector<std::size_t> idx) {
    if (idx.empty()) return 1;
    Rational acc = 0;
    const std::size_t a = idx.front();
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
        const Rational entry = m(a, idx[pos]);
        if (entry == 0) continue;
        std::vector<std::size_t> rest;
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != pos) rest.push_back(idx[t]);
        const Rational sub = matching_pfaffian_rec(m, std::move(rest));
        acc += (pos % 2 == 1 ? entry : -entry) * sub;
    }
    return acc;
}

inline Rational matching_pfaffian(const RatMatrix& m) {
    if (m.rows() % 2 == 1) return 0;
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return matching_pfaffian_rec(m, std::move(idx));
}

inline void subsets_rec(std::size_t n, std::size_t k, std::size_t from,
                        std::vector<std::size_t>& cur,
                        std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets_rec(n, k, 0, cur, out);
    return out;
}

// Rank as the size of the largest nonvanishing minor.
inline std::size_t minor_rank(const RatMatrix& m) {
    for (std::size_t r = std::min(m.rows(), m.cols()); r >= 1; --r) {
        for (const auto& rows : subsets(m.rows(), r))
            for (const auto& cols : subsets(m.cols(), r)) {
                RatMatrix sub(r, r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(rows[i], cols[j]);
                if (perm_det(sub) != 0) return r;
            }
    }
    return 0;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long intv(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }
    Rational rational(long nmax, long dmax) {
        return Rational(Integer(intv(-nmax, nmax))) / Rational(Integer(intv(1, dmax)));
    }
    RatVec vec(std::size_t n, long nmax, long dmax) {
        RatVec v(n);
        for (auto& x : v) x = rational(nmax, dmax);
        return v;
    }
    RatMatrix matrix(std::size_t r, std::size_t c, long nmax, long dmax) {
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(nmax, dmax);
        return m;
    }
    RatMatrix skew(std::size_t n, long nmax, long dmax) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                m(i, j) = rational(nmax, dmax);
                m(j, i) = -m(i, j);
            }
        return m;
    }
    ClassTwoGroup valid_group(std::size_t dimV, std::size_t dimW, long nmax, long dmax) {
        // skew forms on dimV span a dimV(dimV-1)/2 space; more coordinates
        // can never be independent
        dimW = std::min(dimW, dimV * (dimV - 1) / 2);
        for (int attempt = 0; attempt < 100; ++attempt) {
            std::vector<RatMatrix> coords;
            for (std::size_t t = 0; t < dimW; ++t) coords.push_back(skew(dimV, nmax, dmax));
            try {
                return make_group("random", dimV, dimW, coords);
            } catch (const Error&) {
            }
        }
        throw Error("oracle: could not sample a valid group");
    }
};

// All nonzero vectors with coordinates in {-1, 0, 1}.
inline std::vector<RatVec> sign_vectors(std::size_t dim) {
    std::vector<RatVec> out;
    std::vector<long> v(dim, -1);
    while (true) {
        bool nonzero = false;
        for (long x : v)
            if (x != 0) nonzero = true;
        if (nonzero) {
            RatVec r(dim);
            for (std::size_t i = 0; i < dim; ++i) r[i] = Rational(v[i]);
            out.push_back(std::move(r));
        }
        std::size_t pos = dim;
        while (pos > 0 && v[pos - 1] == 1) v[--pos] = -1;
        if (pos == 0) break;
        ++v[pos - 1];
    }
    return out;
}

// Exhaustive search for a subspace V with dim V = k, one-dimensional bracket
// image and nonsingular restricted form, over {-1,0,1}-coordinate bases.
// Verification uses only test-side oracles.
inline std::optional<RatMatrix> brute_force_subspace(const ClassTwoGroup& a, std::size_t k) {
    auto check = [&](const std::vector<RatVec>& basis) -> bool {
        if (minor_rank(RatMatrix::from_columns(basis)) != k) return false;
        std::vector<RatVec> values;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) values.push_back(a.bracket(basis[i], basis[j]));
        if (minor_rank(RatMatrix::from_columns(values)) != 1) return false;
        // scalar Gram against the first nonzero bracket value
        RatVec w0;
        for (const RatVec& val : values)
            if (!is_zero(val)) {
                w0 = val;
                break;
            }
        std::size_t pv = 0;
        while (w0[pv] == 0) ++pv;
        RatMatrix s(k, k);
        std::size_t t = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                s(i, j) = values[t][pv] / w0[pv];
                s(j, i) = -s(i, j);
                ++t;
            }
        return perm_det(s) != 0;
    };

    if (k == a.dimV()) {
        std::vector<RatVec> basis;
        for (std::size_t i = 0; i < k; ++i) {
            RatVec e(a.dimV());
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        if (check(basis)) return RatMatrix::from_columns(basis);
        return std::nullopt;
    }

    const std::vector<RatVec> candidates = sign_vectors(a.dimV());
    std::vector<std::size_t> pick;
    std::optional<RatMatrix> found;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (pick.size() == k) {
            std::vector<RatVec> basis;
            for (std::size_t i : pick) basis.push_back(candidates[i]);
            if (check(basis)) {
                found = RatMatrix::from_columns(basis);
                return true;
            }
            return false;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            pick.push_back(i);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

}  // namespace nil2::testing
