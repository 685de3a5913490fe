#include "nil2/decide.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nil2/errors.hpp"

namespace nil2 {

std::string to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        case Answer::UndeterminedOverQ: return "undetermined-over-Q";
    }
    return "?";
}

std::string to_string(EquivClassReport::Classification c) {
    switch (c) {
        case EquivClassReport::Classification::StandardClass: return "standard-class";
        case EquivClassReport::Classification::IsomorphicPair: return "isomorphic-pair";
        case EquivClassReport::Classification::Distinct: return "distinct";
        case EquivClassReport::Classification::UndeterminedOverQ: return "undetermined-over-Q";
    }
    return "?";
}

namespace {

constexpr const char* kProp1 = "Proposition 1";
constexpr const char* kProp2 = "Proposition 2";
constexpr const char* kProp3 = "Proposition 3";
constexpr const char* kProp4 = "Proposition 4";
constexpr const char* kProp5 = "Proposition 5";
constexpr const char* kThm3 = "Theorem 3";
constexpr const char* kThm4 = "Theorem 4";

Rational form_value(const AltForm& f, const RatVec& x, const RatVec& y) {
    return dot(x, f.matrix() * y);
}

struct SymplecticSplit {
    std::vector<std::pair<RatVec, RatVec>> pairs;  // hyperbolic pairs, mutually orthogonal
    std::vector<RatVec> radical;                   // what is left spans the radical
};

SymplecticSplit symplectic_split(const AltForm& f) {
    const std::size_t n = f.dim();
    std::vector<RatVec> cols;
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e(n);
        e[i] = 1;
        cols.push_back(std::move(e));
    }
    SymplecticSplit out;
    while (true) {
        std::size_t pi = cols.size(), pj = cols.size();
        Rational pivot;
        for (std::size_t i = 0; i < cols.size() && pi == cols.size(); ++i)
            for (std::size_t j = i + 1; j < cols.size(); ++j) {
                pivot = form_value(f, cols[i], cols[j]);
                if (pivot != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        if (pi == cols.size()) break;
        RatVec u = cols[pi], v = cols[pj];
        cols.erase(cols.begin() + static_cast<long>(pj));
        cols.erase(cols.begin() + static_cast<long>(pi));
        for (RatVec& c : cols) {
            const Rational a = form_value(f, c, v) / pivot;
            const Rational b = form_value(f, c, u) / pivot;
            c = c - a * u + b * v;
        }
        out.pairs.emplace_back(std::move(u), std::move(v));
    }
    out.radical = std::move(cols);
    return out;
}

// Scalar Gram matrix of W-valued bracket values that all lie on the line
// spanned by w0. Returns nullopt if some value leaves the line.
std::optional<RatMatrix> line_gram(const FormPencil& p, const std::vector<RatVec>& basis,
                                   const RatVec& w0) {
    std::size_t pivot = w0.size();
    for (std::size_t t = 0; t < w0.size(); ++t)
        if (w0[t] != 0) {
            pivot = t;
            break;
        }
    if (pivot == w0.size()) return std::nullopt;
    RatMatrix s(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            const RatVec val = p.bracket(basis[a], basis[b]);
            const Rational c = val[pivot] / w0[pivot];
            if (!(val == c * w0)) return std::nullopt;
            s(a, b) = c;
            s(b, a) = -c;
        }
    return s;
}

std::vector<RatVec> primitive_vectors(std::size_t dim, int height) {
    std::vector<RatVec> out;
    std::vector<long> v(dim, -height);
    while (true) {
        // canonical representative of the line: first nonzero entry positive,
        // integer content 1
        long firstnz = 0;
        Integer g = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            if (firstnz == 0 && v[i] != 0) firstnz = v[i];
            g = gcd(g, Integer(v[i]));
        }
        if (firstnz > 0 && g == 1) {
            RatVec r(dim);
            for (std::size_t i = 0; i < dim; ++i) r[i] = Rational(v[i]);
            out.push_back(std::move(r));
        }
        std::size_t pos = dim;
        while (pos > 0 && v[pos - 1] == height) v[--pos] = -height;
        if (pos == 0) break;
        ++v[pos - 1];
    }
    return out;
}

std::string projective_key(const RatVec& v) {
    std::size_t first = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            first = i;
            break;
        }
    if (first == v.size()) return "0";
    std::string key;
    for (std::size_t i = 0; i < v.size(); ++i) key += to_string(v[i] / v[first]) + ",";
    return key;
}

Verdict yes_verdict(std::string question, Certificate cert, std::vector<std::string> trace,
                    std::vector<std::string> citations) {
    return Verdict{Answer::Yes, std::move(question), std::move(cert), std::move(trace),
                   std::move(citations)};
}

Verdict no_verdict(std::string question, Certificate cert, std::vector<std::string> trace,
                   std::vector<std::string> citations) {
    return Verdict{Answer::No, std::move(question), std::move(cert), std::move(trace),
                   std::move(citations)};
}

Verdict undetermined_verdict(std::string question, Certificate cert,
                             std::vector<std::string> trace, std::vector<std::string> citations) {
    return Verdict{Answer::UndeterminedOverQ, std::move(question), std::move(cert),
                   std::move(trace), std::move(citations)};
}

std::string locus_summary(const RankLocus& locus) {
    if (locus.all_functionals) return "every functional qualifies";
    std::ostringstream os;
    os << "locus form " << locus.locus_form.to_string() << "; rational points:";
    if (locus.points.empty()) os << " none";
    for (const auto& [pt, mult] : locus.points) os << " " << pt.to_string() << " x" << mult;
    for (const auto& f : locus.leftover) {
        os << "; non-linear factor " << f.form.to_string() << " (mult " << f.multiplicity
           << (f.certified_irreducible ? ", irreducible" : ", not certified") << ")";
    }
    return os.str();
}

}  // namespace

std::optional<RatMatrix> nonsingular_subspace(const AltForm& f, std::size_t k) {
    if (k % 2 == 1) return std::nullopt;
    if (k == 0) return RatMatrix(f.dim(), 0);
    const SymplecticSplit split = symplectic_split(f);
    if (split.pairs.size() < k / 2) return std::nullopt;
    std::vector<RatVec> cols;
    for (std::size_t t = 0; t < k / 2; ++t) {
        cols.push_back(split.pairs[t].first);
        cols.push_back(split.pairs[t].second);
    }
    return RatMatrix::from_columns(cols);
}

bool verify_subspace_witness(const ClassTwoGroup& a, std::size_t k, const SubspaceWitness& w) {
    if (w.basis.rows() != a.dimV() || w.basis.cols() != k) return false;
    if (rank(w.basis) != k) return false;
    if (is_zero(w.image_line) || w.image_line.size() != a.dimW()) return false;

    std::vector<RatVec> basis;
    for (std::size_t j = 0; j < k; ++j) basis.push_back(w.basis.col_vec(j));

    // Bracket image must be exactly the line spanned by image_line.
    std::vector<RatVec> values;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) values.push_back(a.bracket(basis[i], basis[j]));
    values.push_back(w.image_line);
    if (rank(RatMatrix::from_columns(values)) != 1) return false;

    const auto gram = line_gram(a.pencil(), basis, w.image_line);
    if (!gram) return false;
    return det(*gram) != 0;  // restricted form nonsingular of rank k
}

bool verify_functional_witness(const ClassTwoGroup& a, std::size_t k, const FunctionalWitness& w) {
    if (w.functionals.size() != a.dimW()) return false;
    for (const RatVec& psi : w.functionals) {
        if (psi.size() != a.dimW()) return false;
        if (rank(contract(a.pencil(), psi).matrix()) > k) return false;
    }
    return rank(RatMatrix::from_columns(w.functionals)) == a.dimW();
}

bool verify_hom_witness(const GroupHom& hom, bool need_injective) {
    try {
        GroupHom again = make_hom(hom.source(), hom.target(), hom.phi(), hom.psi());
        if (need_injective && !again.injective()) return false;
    } catch (const Error&) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// embeds_standard

namespace {

// Try to extract a witness subspace inside the isotropic span `ucols` whose
// bracket values live on the line spanned by w0.
std::optional<SubspaceWitness> witness_in_isotropic(const ClassTwoGroup& a,
                                                    const std::vector<RatVec>& ucols,
                                                    const RatVec& w0, std::size_t k) {
    if (ucols.size() < k) return std::nullopt;
    const auto gram = line_gram(a.pencil(), ucols, w0);
    if (!gram) return std::nullopt;
    const auto local = nonsingular_subspace(AltForm(*gram), k);
    if (!local) return std::nullopt;
    const RatMatrix u = RatMatrix::from_columns(ucols);
    SubspaceWitness w{u * *local, w0};
    if (!verify_subspace_witness(a, k, w)) return std::nullopt;
    return w;
}

}  // namespace

Verdict embeds_standard(const ClassTwoGroup& a, std::size_t k, const SearchOptions& opts) {
    if (k < 2 || k % 2 == 1) throw OddK("embeds_standard: k must be even and at least 2");
    const std::string question = "N(" + std::to_string(k) + ",1) < " + a.name();
    std::vector<std::string> trace;

    if (k > a.dimV())
        return no_verdict(question, Obstruction{"k exceeds dim V = " + std::to_string(a.dimV())},
                          {"k > dim V: no k-dimensional subspace exists"}, {kProp1});

    if (a.dimW() == 1) {
        const AltForm& form = a.pencil().coord(0);
        const std::size_t r = rank(form.matrix());
        trace.push_back("single coordinate form has rank " + std::to_string(r));
        if (r < k)
            return no_verdict(question,
                              Obstruction{"the bracket form has rank " + std::to_string(r) +
                                          " < k; every subspace restriction has rank <= " +
                                          std::to_string(r)},
                              std::move(trace), {kProp1});
        const auto basis = nonsingular_subspace(form, k);
        if (!basis) throw Error("internal: rank >= k but no nonsingular subspace found");
        SubspaceWitness w{*basis, a.bracket(basis->col_vec(0), basis->col_vec(1))};
        if (!verify_subspace_witness(a, k, w))
            throw Error("internal: constructed subspace witness failed verification");
        trace.push_back("witness subspace of dimension " + std::to_string(k) + " extracted");
        return yes_verdict(question, std::move(w), std::move(trace), {kProp1});
    }

    if (k == a.dimV())
        return no_verdict(
            question,
            Obstruction{"a full-dimensional subspace has bracket image of dimension " +
                        std::to_string(a.dimW()) + " > 1 (the bracket image spans the center)"},
            {"k = dim V forces V = V_A, whose bracket image is the whole center"},
            {kProp1, kProp5});

    if (a.dimW() == 2) {
        const std::size_t rmax = max_functional_rank(a.pencil());
        trace.push_back("maximal functional rank is " + std::to_string(rmax));
        if (k > rmax)
            return no_verdict(question,
                              Obstruction{"every functional yields rank <= " +
                                          std::to_string(rmax) + " < k"},
                              std::move(trace), {kProp1});

        // A witness V with [V,V] = line L forces V isotropic for the
        // annihilator theta of L, so rank(theta) <= 2 (dimV - k).
        const std::size_t iso_bound = 2 * (a.dimV() - k);
        std::vector<RatVec> thetas;
        bool complete = false;
        if (iso_bound + 2 <= a.dimV()) {
            const RankLocus locus = rank_locus(a.pencil(), iso_bound);
            trace.push_back("admissible annihilators: " + locus_summary(locus));
            if (!locus.all_functionals) {
                complete = true;
                for (const auto& [pt, mult] : locus.points) {
                    (void)mult;
                    thetas.push_back({pt.a(), pt.b()});
                }
                if (thetas.empty())
                    return no_verdict(
                        question, LocusWitness{locus},
                        {"no rational functional of rank <= " + std::to_string(iso_bound) +
                             " exists, so no rational candidate image line does either",
                         locus_summary(locus)},
                        {kProp1});
            }
        }
        if (!complete) {
            for (std::size_t m = 0; m + 2 <= a.dimV() && m <= iso_bound; m += 2) {
                const RankLocus locus = rank_locus(a.pencil(), m);
                if (locus.all_functionals) continue;
                for (const auto& [pt, mult] : locus.points) {
                    (void)mult;
                    thetas.push_back({pt.a(), pt.b()});
                }
            }
            for (RatVec& v : primitive_vectors(2, opts.height)) thetas.push_back(std::move(v));
        }
        std::set<std::string> seen;
        for (const RatVec& theta : thetas) {
            if (!seen.insert(projective_key(theta)).second) continue;
            const AltForm f_theta = contract(a.pencil(), theta);
            const SymplecticSplit split = symplectic_split(f_theta);
            if (a.dimV() - split.pairs.size() < k) continue;  // isotropic subspaces too small
            const RatVec w0{theta[1], -theta[0]};             // spans ker(theta)
            const std::size_t variants = split.pairs.size() > 6 ? 64 : (1u << split.pairs.size());
            for (std::size_t sigma = 0; sigma < variants; ++sigma) {
                std::vector<RatVec> ucols = split.radical;
                for (std::size_t t = 0; t < split.pairs.size(); ++t)
                    ucols.push_back((sigma >> t) & 1 ? split.pairs[t].second
                                                     : split.pairs[t].first);
                if (auto w = witness_in_isotropic(a, ucols, w0, k)) {
                    trace.push_back("witness found inside an isotropic subspace of the functional " +
                                    to_string(theta));
                    return yes_verdict(question, std::move(*w), std::move(trace), {kProp1});
                }
            }
        }
        trace.push_back(complete
                            ? "all admissible candidate lines explored without a witness; "
                              "isotropic search is bounded, so absence is not proven"
                            : "height-bounded candidate lines exhausted without a witness");
        return undetermined_verdict(question, std::monostate{}, std::move(trace), {kProp1});
    }

    // Center rank >= 3: best-effort bounded search over candidate image lines.
    for (const RatVec& w0 : primitive_vectors(a.dimW(), opts.height)) {
        const RatMatrix ann = kernel(RatMatrix::row(w0));
        std::vector<RatVec> ucols;
        for (std::size_t i = 0; i < a.dimV(); ++i) {
            RatVec e(a.dimV());
            e[i] = 1;
            ucols.push_back(std::move(e));
        }
        for (std::size_t t = 0; t < ann.cols() && !ucols.empty(); ++t) {
            const AltForm f_theta = contract(a.pencil(), ann.col_vec(t));
            const RatMatrix u = RatMatrix::from_columns(ucols);
            const SymplecticSplit split = symplectic_split(f_theta.restricted(u));
            std::vector<RatVec> next;
            for (const RatVec& r : split.radical) next.push_back(u * r);
            for (const auto& [p1, p2] : split.pairs) {
                next.push_back(u * p1);
                (void)p2;
            }
            ucols = std::move(next);
        }
        if (auto w = witness_in_isotropic(a, ucols, w0, k))
            return yes_verdict(question, std::move(*w),
                               {"witness found for candidate image line " + to_string(w0)},
                               {kProp1});
    }
    return undetermined_verdict(question, std::monostate{},
                                {"bounded search over candidate image lines exhausted"}, {kProp1});
}

// ---------------------------------------------------------------------------
// approx_by_standard

Verdict approx_by_standard(const ClassTwoGroup& a, std::size_t k) {
    const std::string question = a.name() + " < N(" + std::to_string(k) + ",1)";
    if (a.dimW() > 2)
        throw CenterRankUnsupported("approx_by_standard: center rank > 2 is unsupported");

    if (a.dimW() == 1) {
        const std::size_t r = rank(a.pencil().coord(0).matrix());
        if (r <= k)
            return yes_verdict(question, FunctionalWitness{{RatVec{Rational(1)}}},
                               {"single form has rank " + std::to_string(r) + " <= k"}, {kProp2});
        return no_verdict(question,
                          Obstruction{"the only functional line has rank " + std::to_string(r) +
                                      " > k"},
                          {"single form has rank " + std::to_string(r) + " > k"}, {kProp2});
    }

    const std::size_t k_even = k - k % 2;  // ranks of alternating forms are even
    const std::size_t k_locus = std::min(k_even, a.dimV() - a.dimV() % 2);
    const RankLocus locus = rank_locus(a.pencil(), k_locus);
    std::vector<std::string> trace{locus_summary(locus)};

    if (locus.all_functionals) {
        FunctionalWitness w{{RatVec{1, 0}, RatVec{0, 1}}};
        if (!verify_functional_witness(a, k, w))
            throw Error("internal: coordinate functionals failed verification");
        trace.push_back("all functionals have rank <= k; coordinate functionals certify");
        return yes_verdict(question, std::move(w), std::move(trace), {kProp2});
    }
    if (locus.points.size() >= 2) {
        FunctionalWitness w{{RatVec{locus.points[0].point.a(), locus.points[0].point.b()},
                             RatVec{locus.points[1].point.a(), locus.points[1].point.b()}}};
        if (!verify_functional_witness(a, k, w))
            throw Error("internal: locus points failed functional verification");
        trace.push_back("two distinct rational locus points are linearly independent");
        return yes_verdict(question, std::move(w), std::move(trace), {kProp2});
    }
    if (locus.fully_resolved) {
        trace.push_back("rational points of the locus are complete; fewer than 2 exist");
        return no_verdict(question, LocusWitness{locus}, std::move(trace), {kProp2});
    }
    trace.push_back("locus has uncertified non-linear factors; refutation not certified");
    return undetermined_verdict(question, LocusWitness{locus}, std::move(trace), {kProp2});
}

// ---------------------------------------------------------------------------
// full_rank_obstruction

Verdict full_rank_obstruction(const ClassTwoGroup& a) {
    if (a.dimW() != 2)
        throw CenterRankUnsupported("full_rank_obstruction: needs center rank exactly 2");
    if (a.dimV() % 2 == 1) throw OddK("full_rank_obstruction: needs even dim V");
    const std::string question = a.name() + " ~ N(" + std::to_string(a.dimV()) + ",1)";
    return no_verdict(
        question,
        Obstruction{"equivalence with N(" + std::to_string(a.dimV()) +
                    ",1) would embed it, forcing a subspace of full dimension " +
                    std::to_string(a.dimV()) +
                    " with one-dimensional bracket image; the bracket image of the whole "
                    "space is the full rank-2 center"},
        {"dim [V_A, V_A] = 2 by the spanning condition, but an embedded N(" +
         std::to_string(a.dimV()) + ",1) needs dim [V,V] = 1 on all of V_A"},
        {kProp5});
}

// ---------------------------------------------------------------------------
// find_embedding

namespace {

struct BudgetExceeded {};

std::vector<RatMatrix> candidate_center_maps(std::size_t rows, std::size_t cols, int height) {
    std::vector<RatMatrix> out;
    std::vector<long> v(rows * cols, -height);
    while (true) {
        RatMatrix m(rows, cols);
        Integer content = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = Rational(v[i * cols + j]);
                content = gcd(content, Integer(v[i * cols + j]));
            }
        if (content == 1 && rank(m) == cols) out.push_back(std::move(m));
        std::size_t pos = v.size();
        while (pos > 0 && v[pos - 1] == height) v[--pos] = -height;
        if (pos == 0) break;
        ++v[pos - 1];
    }
    return out;
}

// Sample functionals on W_B used for the rank-compatibility filter.
std::vector<RatVec> sample_functionals(std::size_t dimW) {
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < dimW; ++i) {
        RatVec e(dimW);
        e[i] = 1;
        out.push_back(std::move(e));
    }
    if (dimW >= 2) {
        RatVec ones(dimW, Rational(1));
        out.push_back(ones);
        RatVec alt(dimW);
        for (std::size_t i = 0; i < dimW; ++i) alt[i] = (i % 2 == 0) ? 1 : -1;
        out.push_back(std::move(alt));
        RatVec two(dimW);
        two[0] = 2;
        two[1] = 1;
        out.push_back(std::move(two));
    }
    return out;
}

struct ColumnSearch {
    const ClassTwoGroup& a;
    const ClassTwoGroup& b;
    const std::vector<RatMatrix>& pulled;  // psi-pulled bracket coordinates of A
    int height;
    long long budget;
    long long nodes = 0;
    std::vector<RatVec> cols = {};

    bool dfs() {
        const std::size_t s = cols.size();
        if (s == a.dimV()) return true;

        // Linear constraints on the next column from all previous columns.
        std::vector<std::vector<Rational>> rows;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t t = 0; t < b.dimW(); ++t) {
                RatVec row = b.pencil().coord(t).matrix().transpose() * cols[i];
                row.push_back(pulled[t](i, s));
                rows.push_back(std::move(row));
            }
        RatMatrix sys = rows.empty() ? RatMatrix(0, b.dimV() + 1) : RatMatrix::from_rows(rows);
        const RrefResult rr = rref(sys);
        for (std::size_t c : rr.pivots)
            if (c == b.dimV()) return false;  // inconsistent

        std::vector<bool> is_pivot(b.dimV(), false);
        for (std::size_t c : rr.pivots) is_pivot[c] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < b.dimV(); ++c)
            if (!is_pivot[c]) free_cols.push_back(c);

        std::vector<long> assign(free_cols.size(), -height);
        while (true) {
            if (++nodes > budget) throw BudgetExceeded{};
            RatVec cand(b.dimV());
            for (std::size_t f = 0; f < free_cols.size(); ++f) cand[free_cols[f]] = assign[f];
            for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
                Rational x = rr.rref(t, b.dimV());
                for (std::size_t f = 0; f < free_cols.size(); ++f)
                    x -= rr.rref(t, free_cols[f]) * cand[free_cols[f]];
                cand[rr.pivots[t]] = x;
            }
            if (!is_zero(cand)) {
                std::vector<RatVec> test = cols;
                test.push_back(cand);
                if (rank(RatMatrix::from_columns(test)) == test.size()) {
                    cols.push_back(cand);
                    if (dfs()) return true;
                    cols.pop_back();
                }
            }
            if (free_cols.empty()) break;
            std::size_t pos = assign.size();
            while (pos > 0 && assign[pos - 1] == height) assign[--pos] = -height;
            if (pos == 0) break;
            ++assign[pos - 1];
        }
        return false;
    }
};

}  // namespace

EmbeddingSearchResult find_embedding(const ClassTwoGroup& a, const ClassTwoGroup& b,
                                     bool require_bijective, const SearchOptions& opts) {
    if (require_bijective && (a.dimV() != b.dimV() || a.dimW() != b.dimW()))
        return {std::nullopt, false};
    if (b.dimW() < a.dimW() || b.dimV() < a.dimV()) return {std::nullopt, false};

    // Obvious candidate first: the identity pair.
    if (a.dimV() == b.dimV() && a.dimW() == b.dimW()) {
        try {
            GroupHom id = make_hom(a, b, RatMatrix::identity(a.dimV()),
                                   RatMatrix::identity(a.dimW()));
            if (id.injective()) return {id, false};
        } catch (const Error&) {
        }
    }

    const std::vector<RatVec> samples = sample_functionals(b.dimW());
    std::vector<std::size_t> sample_ranks;
    for (const RatVec& eta : samples)
        sample_ranks.push_back(rank(contract(b.pencil(), eta).matrix()));

    bool aborted = false;
    long long nodes_left = opts.max_nodes;
    for (const RatMatrix& psi : candidate_center_maps(b.dimW(), a.dimW(), opts.psi_height)) {
        if (nodes_left <= 0) {
            aborted = true;
            break;
        }
        // psi-pulled bracket coordinates of A, one per coordinate of W_B.
        std::vector<RatMatrix> pulled;
        for (std::size_t t = 0; t < b.dimW(); ++t) {
            RatMatrix acc(a.dimV(), a.dimV());
            for (std::size_t s = 0; s < a.dimW(); ++s) {
                if (psi(t, s) == 0) continue;
                acc = acc + a.pencil().coord(s).matrix() * psi(t, s);
            }
            pulled.push_back(std::move(acc));
        }

        // Rank compatibility: the pulled contraction of any functional eta is
        // phi^T contract_B(eta) phi, so its rank is bounded by (equal to, for
        // bijections) the rank on the B side.
        bool feasible = true;
        for (std::size_t i = 0; i < samples.size() && feasible; ++i) {
            RatMatrix acc(a.dimV(), a.dimV());
            for (std::size_t t = 0; t < b.dimW(); ++t) {
                if (samples[i][t] == 0) continue;
                acc = acc + pulled[t] * samples[i][t];
            }
            const std::size_t r = rank(acc);
            if (require_bijective ? r != sample_ranks[i] : r > sample_ranks[i]) feasible = false;
        }
        if (!feasible) continue;

        ColumnSearch search{a, b, pulled, opts.height, nodes_left};
        try {
            if (search.dfs()) {
                try {
                    GroupHom hom = make_hom(a, b, RatMatrix::from_columns(search.cols), psi);
                    if (hom.injective()) return {hom, aborted};
                } catch (const Error&) {
                    // fall through: constraints were necessary but not sufficient
                }
            }
            nodes_left -= search.nodes;
        } catch (const BudgetExceeded&) {
            aborted = true;
            break;
        }
    }
    return {std::nullopt, aborted};
}

// ---------------------------------------------------------------------------
// precedes

Verdict precedes(const ClassTwoGroup& a, const ClassTwoGroup& b, const SearchOptions& opts) {
    if (a.dimW() != 2)
        throw CenterRankUnsupported("precedes: the source group needs center rank exactly 2");
    const std::string question = a.name() + " < " + b.name();
    std::vector<std::string> trace;

    if (a.same_group(b))
        return yes_verdict(question, HomWitness{identity_hom(a)},
                           {"identity embedding of the group into itself"}, {kProp3});

    // Condition 1: a chain A < N(k,1) < B over the finite k-range.
    bool chain_unknown = false;
    const std::size_t kmax = std::min(a.dimV(), b.dimV());
    for (std::size_t k = 2; k <= kmax; k += 2) {
        Verdict va = approx_by_standard(a, k);
        if (va.answer == Answer::UndeterminedOverQ) {
            chain_unknown = true;
            trace.push_back("k=" + std::to_string(k) + ": approximation side undetermined");
            continue;
        }
        if (va.answer == Answer::No) {
            trace.push_back("k=" + std::to_string(k) + ": approximation side fails");
            continue;
        }
        Verdict vb = embeds_standard(b, k, opts);
        if (vb.answer == Answer::Yes) {
            trace.push_back("k=" + std::to_string(k) + ": chain through N(" + std::to_string(k) +
                            ",1)");
            return yes_verdict(question,
                               ChainWitness{k, std::make_shared<Verdict>(std::move(va)),
                                            std::make_shared<Verdict>(std::move(vb))},
                               std::move(trace), {kProp3, kProp2, kProp1});
        }
        if (vb.answer == Answer::UndeterminedOverQ) {
            chain_unknown = true;
            trace.push_back("k=" + std::to_string(k) + ": embedding side undetermined");
        } else {
            trace.push_back("k=" + std::to_string(k) + ": embedding side fails");
        }
    }

    // Condition 2: an embedding with trivial kernels.
    const bool embedding_possible = b.dimW() >= a.dimW() && b.dimV() >= a.dimV();
    if (!embedding_possible) {
        trace.push_back("no injective center map exists (dim W_B = " + std::to_string(b.dimW()) +
                        " < 2) or dim V_B < dim V_A");
        if (!chain_unknown)
            return no_verdict(question,
                              Obstruction{"every even k is refuted and an embedding is "
                                          "dimensionally impossible"},
                              std::move(trace), {kProp3});
        return undetermined_verdict(question, std::monostate{}, std::move(trace), {kProp3});
    }
    EmbeddingSearchResult res = find_embedding(a, b, false, opts);
    if (res.hom) {
        trace.push_back("embedding with trivial kernels found");
        return yes_verdict(question, HomWitness{*res.hom}, std::move(trace), {kProp3});
    }
    trace.push_back(res.aborted ? "embedding search aborted by budget"
                                : "height-bounded embedding search exhausted");
    return undetermined_verdict(question, std::monostate{}, std::move(trace), {kProp3});
}

// ---------------------------------------------------------------------------
// iso_distinguish

namespace {

// Square-free part of n with its sign; the square class of the discriminant
// of a binary quadratic form is preserved by invertible substitutions (the
// discriminant picks up det^2) and by scalar multiples.
Integer square_class(const Integer& n) {
    Integer out = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2 == 1) out *= p;
    return out;
}

// Substitution-invariant signature of a binary form. The coarse part
// (degree, rational-root multiplicity multiset, square-free degrees per
// multiplicity) is always comparable. The fine part lists each irreducible
// factor with its discriminant square class for quadratics; it is only
// comparable when the factorization is fully certified on both sides,
// because an uncertified split changes the factor list without changing
// the form.
struct FormSignature {
    std::string coarse;
    bool certified = true;
    std::string fine;
};

FormSignature form_signature(const BinaryForm& f) {
    FormSignature sig;
    if (f.is_zero()) {
        sig.coarse = "zero";
        return sig;
    }
    std::ostringstream coarse;
    coarse << "deg" << f.degree() << ";roots[";
    const BinaryRoots roots = binary_rational_roots(f);
    std::vector<int> mults;
    for (const auto& r : roots.roots) mults.push_back(r.multiplicity);
    std::sort(mults.begin(), mults.end());
    for (int m : mults) coarse << m << ",";
    coarse << "];sqfree[";
    std::vector<std::string> fine_entries;
    if (roots.leftover.degree() >= 1) {
        std::map<int, int> deg_at_mult;
        for (const BinaryFactor& f2 : factor_binary(roots.leftover)) {
            deg_at_mult[f2.multiplicity] += static_cast<int>(f2.form.degree());
            if (!f2.certified_irreducible) sig.certified = false;
            std::ostringstream e;
            e << f2.multiplicity << ":" << f2.form.degree();
            if (f2.form.degree() == 2) {
                const BinaryForm q = f2.form.normalized();
                const Integer disc =
                    num(q.coeff(1) * q.coeff(1) - 4 * q.coeff(0) * q.coeff(2));
                e << ":disc" << to_string(square_class(disc));
            }
            fine_entries.push_back(e.str());
        }
        for (const auto& [m, d] : deg_at_mult) coarse << m << ":" << d << ",";
    }
    coarse << "]";
    sig.coarse = coarse.str();
    std::sort(fine_entries.begin(), fine_entries.end());
    for (const std::string& e : fine_entries) sig.fine += e + ";";
    return sig;
}

// True when the signatures provably differ.
bool signatures_differ(const FormSignature& a, const FormSignature& b) {
    if (a.coarse != b.coarse) return true;
    return a.certified && b.certified && a.fine != b.fine;
}

struct LocusSignature {
    bool all_functionals;
    FormSignature form;
};

LocusSignature locus_signature(const RankLocus& locus) {
    if (locus.all_functionals) return {true, {}};
    // The locus form carries the complete structure: its rational roots are
    // the locus points and its non-linear factors the leftover.
    return {false, form_signature(locus.locus_form)};
}

bool signatures_differ(const LocusSignature& a, const LocusSignature& b) {
    if (a.all_functionals != b.all_functionals) return true;
    if (a.all_functionals) return false;
    return signatures_differ(a.form, b.form);
}

}  // namespace

IsoOutcome iso_distinguish(const ClassTwoGroup& a, const ClassTwoGroup& b,
                           const SearchOptions& opts) {
    if (a.dimV() != b.dimV() || a.dimW() != b.dimW())
        return {IsoOutcome::Kind::Distinguished, std::nullopt, "dimension",
                "(dimV, dimW) = (" + std::to_string(a.dimV()) + "," + std::to_string(a.dimW()) +
                    ") vs (" + std::to_string(b.dimV()) + "," + std::to_string(b.dimW()) + ")"};

    if (a.dimW() == 1) {
        const std::size_t ra = rank(a.pencil().coord(0).matrix());
        const std::size_t rb = rank(b.pencil().coord(0).matrix());
        if (ra != rb)
            return {IsoOutcome::Kind::Distinguished, std::nullopt, "bracket rank",
                    std::to_string(ra) + " vs " + std::to_string(rb)};
        // Same rank and dimension: alternating forms are equivalent; build the
        // explicit base change through symplectic bases scaled to S(r).
        auto standard_basis = [&](const ClassTwoGroup& g) {
            const AltForm& f = g.pencil().coord(0);
            SymplecticSplit split = symplectic_split(f);
            std::vector<RatVec> cols;
            for (auto& [u, v] : split.pairs) {
                const Rational pivot = form_value(f, u, v);
                cols.push_back(u);
                cols.push_back((1 / pivot) * v);
            }
            for (auto& r : split.radical) cols.push_back(r);
            return RatMatrix::from_columns(cols);
        };
        const RatMatrix pa = standard_basis(a);
        const RatMatrix pb = standard_basis(b);
        const auto pa_inv = solve(pa, RatMatrix::identity(a.dimV()));
        if (!pa_inv) throw Error("internal: symplectic basis failed to invert");
        GroupHom hom = make_hom(a, b, pb * *pa_inv, RatMatrix::identity(1));
        return {IsoOutcome::Kind::Isomorphic, hom, "", "explicit symplectic base change"};
    }

    if (a.dimW() == 2) {
        if (a.dimV() % 2 == 0) {
            const FormSignature sa = form_signature(pfaffian_pencil(a.pencil()));
            const FormSignature sb = form_signature(pfaffian_pencil(b.pencil()));
            if (signatures_differ(sa, sb))
                return {IsoOutcome::Kind::Distinguished, std::nullopt, "pfaffian form structure",
                        sa.coarse + "|" + sa.fine + " vs " + sb.coarse + "|" + sb.fine};
        }
        for (std::size_t k = 2; k + 2 <= a.dimV(); k += 2) {
            const LocusSignature sa = locus_signature(rank_locus(a.pencil(), k));
            const LocusSignature sb = locus_signature(rank_locus(b.pencil(), k));
            if (signatures_differ(sa, sb))
                return {IsoOutcome::Kind::Distinguished, std::nullopt,
                        "rank-" + std::to_string(k) + " locus structure",
                        (sa.all_functionals ? "all" : sa.form.coarse + "|" + sa.form.fine) +
                            " vs " +
                            (sb.all_functionals ? "all" : sb.form.coarse + "|" + sb.form.fine)};
        }
    }

    EmbeddingSearchResult res = find_embedding(a, b, true, opts);
    if (res.hom) return {IsoOutcome::Kind::Isomorphic, *res.hom, "", "certificate found by search"};
    return {IsoOutcome::Kind::UndeterminedOverQ, std::nullopt, "",
            res.aborted ? "isomorphism search aborted by budget; invariants agree"
                        : "height-bounded isomorphism search exhausted; invariants agree"};
}

// ---------------------------------------------------------------------------
// geom_equiv

namespace {

struct StandardMembership {
    Verdict approx;
    Verdict embed;
    bool yes() const { return approx.answer == Answer::Yes && embed.answer == Answer::Yes; }
    bool definitely_not() const {
        return approx.answer == Answer::No || embed.answer == Answer::No;
    }
};

StandardMembership equivalent_to_standard(const ClassTwoGroup& g, std::size_t k,
                                          const SearchOptions& opts) {
    return {approx_by_standard(g, k), embeds_standard(g, k, opts)};
}

EquivClassReport mixed_rank_equiv(const ClassTwoGroup& rank2, const ClassTwoGroup& rank1,
                                  const SearchOptions& opts) {
    EquivClassReport report{EquivClassReport::Classification::UndeterminedOverQ, 0, "", {}, {},
                            {kThm4, kThm3}};
    const std::size_t k = rank(rank1.pencil().coord(0).matrix());
    report.trace.push_back(rank1.name() + " lies in the standard class of N(" +
                           std::to_string(k) + ",1)");

    if (rank2.dimV() == k) {
        Verdict obstruction = full_rank_obstruction(rank2);
        report.classification = EquivClassReport::Classification::Distinct;
        report.details = rank2.name() + " cannot be equivalent to N(" + std::to_string(k) +
                         ",1): its center has rank 2 while dim V = k";
        report.trace.push_back(report.details);
        report.citations.push_back(kProp5);
        report.supporting.push_back(std::move(obstruction));
        return report;
    }

    StandardMembership m = equivalent_to_standard(rank2, k, opts);
    if (m.yes()) {
        report.classification = EquivClassReport::Classification::StandardClass;
        report.k = k;
        report.details = "both groups are equivalent to N(" + std::to_string(k) + ",1)";
        report.supporting.push_back(approx_by_standard(rank1, k));
        report.supporting.push_back(embeds_standard(rank1, k, opts));
        report.citations.push_back(kProp1);
        report.citations.push_back(kProp2);
    } else if (m.definitely_not()) {
        report.classification = EquivClassReport::Classification::Distinct;
        report.details = rank2.name() + " is not equivalent to N(" + std::to_string(k) + ",1)";
        if (m.approx.answer == Answer::No) report.citations.push_back(kProp2);
        if (m.embed.answer == Answer::No) report.citations.push_back(kProp1);
    } else {
        report.details = "membership of " + rank2.name() + " in the class of N(" +
                         std::to_string(k) + ",1) is undetermined over Q";
    }
    report.supporting.push_back(std::move(m.approx));
    report.supporting.push_back(std::move(m.embed));
    return report;
}

}  // namespace

EquivClassReport geom_equiv(const ClassTwoGroup& a, const ClassTwoGroup& b,
                            const SearchOptions& opts) {
    if (a.dimW() > 2 || b.dimW() > 2)
        throw CenterRankUnsupported("geom_equiv: center ranks above 2 are unsupported");

    if (a.dimW() == 1 && b.dimW() == 1) {
        const std::size_t ka = rank(a.pencil().coord(0).matrix());
        const std::size_t kb = rank(b.pencil().coord(0).matrix());
        EquivClassReport report{EquivClassReport::Classification::Distinct, 0, "", {}, {}, {kThm3}};
        report.trace.push_back("bracket ranks: " + std::to_string(ka) + " and " +
                               std::to_string(kb));
        if (ka == kb) {
            report.classification = EquivClassReport::Classification::StandardClass;
            report.k = ka;
            report.details = "both completions lie in the class of N(" + std::to_string(ka) +
                             ",1): cyclic-center groups are classified by the bracket rank";
            for (const ClassTwoGroup* g : {&a, &b}) {
                report.supporting.push_back(approx_by_standard(*g, ka));
                report.supporting.push_back(embeds_standard(*g, ka, opts));
            }
            report.citations.push_back(kProp1);
            report.citations.push_back(kProp2);
        } else {
            report.details = "cyclic-center groups with different bracket ranks are never "
                             "equivalent";
            report.citations.push_back(kProp1);
        }
        return report;
    }

    if (a.dimW() != b.dimW()) {
        return a.dimW() == 2 ? mixed_rank_equiv(a, b, opts) : mixed_rank_equiv(b, a, opts);
    }

    // Both centers have rank 2.
    EquivClassReport report{EquivClassReport::Classification::UndeterminedOverQ, 0, "", {}, {},
                            {kThm4, kProp4}};
    bool chain_unknown = false;
    const std::size_t kmax = std::min(a.dimV(), b.dimV());
    for (std::size_t k = 2; k <= kmax; k += 2) {
        StandardMembership ma = equivalent_to_standard(a, k, opts);
        StandardMembership mb = equivalent_to_standard(b, k, opts);
        if (ma.yes() && mb.yes()) {
            report.classification = EquivClassReport::Classification::StandardClass;
            report.k = k;
            report.details = "both groups are equivalent to N(" + std::to_string(k) + ",1)";
            report.trace.push_back("common standard class found at k = " + std::to_string(k));
            report.citations.push_back(kProp1);
            report.citations.push_back(kProp2);
            report.supporting.push_back(std::move(ma.approx));
            report.supporting.push_back(std::move(ma.embed));
            report.supporting.push_back(std::move(mb.approx));
            report.supporting.push_back(std::move(mb.embed));
            if (a.same_group(b))
                report.details += "; the identity map also certifies isomorphism";
            return report;
        }
        const bool blocked = ma.definitely_not() || mb.definitely_not();
        if (!blocked) chain_unknown = true;
        report.trace.push_back("k=" + std::to_string(k) + ": " +
                               (blocked ? "refuted" : "undetermined"));
        if (ma.definitely_not() && k == a.dimV() && report.supporting.empty())
            report.supporting.push_back(ma.embed.answer == Answer::No ? std::move(ma.embed)
                                                                      : std::move(ma.approx));
    }

    IsoOutcome iso = iso_distinguish(a, b, opts);
    if (iso.kind == IsoOutcome::Kind::Isomorphic) {
        report.classification = EquivClassReport::Classification::IsomorphicPair;
        report.details = "completions are isomorphic: " + iso.details;
        report.trace.push_back("isomorphism certificate verified");
        if (iso.iso && !verify_hom_witness(*iso.iso, true))
            throw Error("internal: isomorphism certificate failed re-verification");
        return report;
    }
    if (chain_unknown) {
        report.details = "some standard class could not be decided over Q";
        return report;
    }
    if (iso.kind == IsoOutcome::Kind::Distinguished) {
        report.classification = EquivClassReport::Classification::Distinct;
        report.details = "no common standard class, and the " + iso.invariant +
                         " invariant distinguishes the groups (" + iso.details + ")";
        return report;
    }
    report.details = "no common standard class; isomorphism undetermined (" + iso.details + ")";
    return report;
}

// ---------------------------------------------------------------------------
// paper_example

PaperExampleReport paper_example() {
    // [v1,v2] = [v3,v4] = w1, [v1,v3] = w2 on a 4-dimensional V.
    RatMatrix m1 = RatMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    RatMatrix m2 = RatMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}});
    ClassTwoGroup group = make_group("paper-example", 4, 2, {m1, m2});

    std::vector<std::string> trace;
    trace.push_back("group valid: bracket coordinates are alternating and span the center");

    BinaryForm pf = pfaffian_pencil(group.pencil()).normalized();
    BinaryForm detf = (pf * pf).normalized();
    trace.push_back("pfaffian of the symbolic pencil: " + pf.to_string());
    trace.push_back("determinant of the symbolic pencil: " + detf.to_string());

    RankLocus locus2 = rank_locus(group.pencil(), 2);
    trace.push_back("rank<=2 locus: " + locus_summary(locus2));

    Verdict embed2 = embeds_standard(group, 2);
    trace.push_back("N(2,1) embeds: " + to_string(embed2.answer));
    Verdict approx2 = approx_by_standard(group, 2);
    trace.push_back("approximates into N(2,1): " + to_string(approx2.answer) +
                    " (only one degenerate functional)");
    Verdict prop5 = full_rank_obstruction(group);
    trace.push_back("equivalent to N(4,1): " + to_string(prop5.answer) +
                    " (full-dimensional center obstruction)");

    EquivClassReport conclusion{EquivClassReport::Classification::Distinct, 0,
                                "not geometrically equivalent to any N(k,1)",
                                {},
                                {},
                                {kProp2, kProp5, kProp1}};
    conclusion.trace.push_back(
        "candidates are k = 2 and k = 4 only: embeddings need k <= dim V = 4");
    conclusion.trace.push_back("k = 2 refuted: a single rational functional of rank <= 2");
    conclusion.trace.push_back("k = 4 refuted: rank-2 center excludes the full class");
    conclusion.supporting.push_back(embed2);
    conclusion.supporting.push_back(approx2);
    conclusion.supporting.push_back(prop5);
    trace.push_back("conclusion: " + conclusion.details);

    return PaperExampleReport{group,   pf,      detf,  locus2, std::move(embed2),
                              std::move(approx2), std::move(prop5), std::move(conclusion),
                              std::move(trace)};
}

}  // namespace nil2
