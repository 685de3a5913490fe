#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nil2/decide.hpp"
#include "nil2/errors.hpp"
#include "nil2/linalg.hpp"
#include "oracles.hpp"

using namespace nil2;
using nil2::testing::Rng;

namespace {

ClassTwoGroup example_group() {
    return make_group(
        "A", 4, 2,
        {RatMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}),
         RatMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}})});
}

ClassTwoGroup product_group() { return direct_product(standard_group(2), standard_group(2)); }

bool cites(const std::vector<std::string>& citations, const std::string& name) {
    for (const std::string& c : citations)
        if (c == name) return true;
    return false;
}

}  // namespace

TEST_CASE("embeds_standard on the named examples") {
    const ClassTwoGroup a = example_group();

    const Verdict v2 = embeds_standard(a, 2);
    CHECK(v2.answer == Answer::Yes);
    const auto* w = std::get_if<SubspaceWitness>(&v2.certificate);
    REQUIRE(w != nullptr);
    CHECK(verify_subspace_witness(a, 2, *w));

    // k = dim V with rank-2 center is impossible
    const Verdict v4 = embeds_standard(a, 4);
    CHECK(v4.answer == Answer::No);

    // cyclic center: decided by the rank of the single form
    const ClassTwoGroup n41 = standard_group(4);
    CHECK(embeds_standard(n41, 2).answer == Answer::Yes);
    CHECK(embeds_standard(n41, 4).answer == Answer::Yes);
    CHECK(embeds_standard(standard_group(2), 4).answer == Answer::No);  // k > dimV

    CHECK(embeds_standard(product_group(), 2).answer == Answer::Yes);
    CHECK(embeds_standard(product_group(), 4).answer == Answer::No);

    CHECK_THROWS_AS(embeds_standard(a, 3), OddK);
}

TEST_CASE("embeds_standard Yes witnesses always verify") {
    Rng rng(97);
    for (int trial = 0; trial < 15; ++trial) {
        const ClassTwoGroup g = rng.valid_group(4, 2, 3, 2);
        for (std::size_t k = 2; k <= g.dimV(); k += 2) {
            const Verdict v = embeds_standard(g, k);
            if (v.answer != Answer::Yes) continue;
            const auto* w = std::get_if<SubspaceWitness>(&v.certificate);
            REQUIRE(w != nullptr);
            CHECK(verify_subspace_witness(g, k, *w));
            CHECK(k <= max_functional_rank(g.pencil()));  // rank ceiling
        }
    }
}

TEST_CASE("approx_by_standard on the named examples") {
    const Verdict va = approx_by_standard(example_group(), 2);
    CHECK(va.answer == Answer::No);
    const auto* locus = std::get_if<LocusWitness>(&va.certificate);
    REQUIRE(locus != nullptr);
    REQUIRE(locus->locus.points.size() == 1);
    CHECK(locus->locus.points[0].point == ProjPoint::infinity());

    const Verdict vp = approx_by_standard(product_group(), 2);
    CHECK(vp.answer == Answer::Yes);
    const auto* fw = std::get_if<FunctionalWitness>(&vp.certificate);
    REQUIRE(fw != nullptr);
    CHECK(fw->functionals.size() == 2);
    CHECK(verify_functional_witness(product_group(), 2, *fw));

    // cyclic center cases
    CHECK(approx_by_standard(standard_group(4), 4).answer == Answer::Yes);
    CHECK(approx_by_standard(standard_group(4), 2).answer == Answer::No);

    // k at the dimension is always a Yes
    CHECK(approx_by_standard(example_group(), 4).answer == Answer::Yes);

    CHECK_THROWS_AS(approx_by_standard(direct_product(example_group(), standard_group(2)), 2),
                    CenterRankUnsupported);
}

TEST_CASE("full_rank_obstruction") {
    const Verdict v = full_rank_obstruction(example_group());
    CHECK(v.answer == Answer::No);
    CHECK(cites(v.citations, "Proposition 5"));

    CHECK(full_rank_obstruction(product_group()).answer == Answer::No);
    CHECK_THROWS_AS(full_rank_obstruction(standard_group(2)), CenterRankUnsupported);
}

TEST_CASE("precedes") {
    const ClassTwoGroup a = example_group();

    // identity embedding
    const Verdict self = precedes(a, a);
    CHECK(self.answer == Answer::Yes);
    CHECK(std::holds_alternative<HomWitness>(self.certificate));

    // chain through N(2,1)
    const Verdict chain = precedes(product_group(), standard_group(2));
    CHECK(chain.answer == Answer::Yes);
    const auto* c = std::get_if<ChainWitness>(&chain.certificate);
    REQUIRE(c != nullptr);
    CHECK(c->k == 2);
    CHECK(c->approx->answer == Answer::Yes);
    CHECK(c->embed->answer == Answer::Yes);

    // exhaustion of both branches
    const Verdict no = precedes(a, standard_group(2));
    CHECK(no.answer == Answer::No);

    CHECK_THROWS_AS(precedes(standard_group(2), a), CenterRankUnsupported);
}

TEST_CASE("iso_distinguish") {
    const ClassTwoGroup a = example_group();
    const IsoOutcome self = iso_distinguish(a, a);
    CHECK(self.kind == IsoOutcome::Kind::Isomorphic);
    REQUIRE(self.iso.has_value());
    CHECK(verify_hom_witness(*self.iso, true));

    // pfaffian root structure separates the example from the product
    const IsoOutcome diff = iso_distinguish(a, product_group());
    CHECK(diff.kind == IsoOutcome::Kind::Distinguished);

    // same-rank cyclic-center groups get an explicit isomorphism
    RatMatrix scaled(2, 2);
    scaled(0, 1) = Rational(3, 2);
    scaled(1, 0) = Rational(-3, 2);
    const ClassTwoGroup b = make_group("B", 2, 1, {scaled});
    const IsoOutcome iso = iso_distinguish(standard_group(2), b);
    CHECK(iso.kind == IsoOutcome::Kind::Isomorphic);
    REQUIRE(iso.iso.has_value());
    CHECK(verify_hom_witness(*iso.iso, true));
}

TEST_CASE("iso_distinguish separates quadratic leftovers by discriminant class") {
    // pfaffians l1^2 + l2^2 and l1^2 + 2*l2^2: same degree and root structure,
    // but the discriminant square classes (-1 vs -2) differ under any
    // invertible substitution.
    auto build = [](const char* name, const Rational& c) {
        RatMatrix m1(4, 4), m2(4, 4);
        m1(0, 1) = 1;
        m1(1, 0) = -1;
        m1(2, 3) = 1;
        m1(3, 2) = -1;
        m2(0, 2) = 1;
        m2(2, 0) = -1;
        m2(1, 3) = -c;
        m2(3, 1) = c;
        return make_group(name, 4, 2, {m1, m2});
    };
    const ClassTwoGroup q1 = build("Q1", 1);
    const ClassTwoGroup q2 = build("Q2", 2);
    CHECK(pfaffian_pencil(q1.pencil()).normalized() == BinaryForm(2, {1, 0, 1}));
    CHECK(pfaffian_pencil(q2.pencil()).normalized() == BinaryForm(2, {1, 0, 2}));

    const IsoOutcome iso = iso_distinguish(q1, q2);
    CHECK(iso.kind == IsoOutcome::Kind::Distinguished);
    CHECK(geom_equiv(q1, q2).classification == EquivClassReport::Classification::Distinct);

    // and a plain scaled copy stays isomorphic
    const IsoOutcome same = iso_distinguish(q1, build("Q1b", 1));
    CHECK(same.kind == IsoOutcome::Kind::Isomorphic);
}

TEST_CASE("iso_distinguish recovers a base-changed pair") {
    const ClassTwoGroup a = example_group();

    // B carries the bracket of A rewritten through (P, Q): psi [u,v]_A = [Pu, Pv]_B.
    const RatMatrix p = RatMatrix::from_rows(
        {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    const RatMatrix q = RatMatrix::from_rows({{1, 1}, {0, 1}});
    const auto p_inv = solve(p, RatMatrix::identity(4));
    REQUIRE(p_inv.has_value());

    std::vector<RatMatrix> coords;
    for (std::size_t t = 0; t < 2; ++t) {
        RatMatrix acc(4, 4);
        for (std::size_t s = 0; s < 2; ++s) {
            if (q(t, s) == 0) continue;
            acc = acc + p_inv->transpose() * a.pencil().coord(s).matrix() * *p_inv * q(t, s);
        }
        coords.push_back(std::move(acc));
    }
    const ClassTwoGroup b = make_group("B", 4, 2, coords);

    // (P, Q) itself is an isomorphism; the bounded search must find one too.
    CHECK(verify_hom_witness(make_hom(a, b, p, q), true));
    const IsoOutcome iso = iso_distinguish(a, b);
    CHECK(iso.kind == IsoOutcome::Kind::Isomorphic);
    REQUIRE(iso.iso.has_value());
    CHECK(verify_hom_witness(*iso.iso, true));
}

TEST_CASE("geom_equiv on standard groups") {
    for (std::size_t k1 : {2u, 4u, 6u})
        for (std::size_t k2 : {2u, 4u, 6u}) {
            const EquivClassReport r = geom_equiv(standard_group(k1), standard_group(k2));
            if (k1 == k2) {
                CHECK(r.classification == EquivClassReport::Classification::StandardClass);
                CHECK(r.k == k1);
                // the standard class is supported by both-sided membership verdicts
                REQUIRE(r.supporting.size() == 4);
                for (const Verdict& v : r.supporting) CHECK(v.answer == Answer::Yes);
            } else {
                CHECK(r.classification == EquivClassReport::Classification::Distinct);
            }
        }
}

TEST_CASE("geom_equiv on the example group") {
    const ClassTwoGroup a = example_group();

    const EquivClassReport self = geom_equiv(a, a);
    CHECK(self.classification == EquivClassReport::Classification::IsomorphicPair);

    const EquivClassReport vs41 = geom_equiv(a, standard_group(4));
    CHECK(vs41.classification == EquivClassReport::Classification::Distinct);
    CHECK(cites(vs41.citations, "Proposition 5"));

    const EquivClassReport vs21 = geom_equiv(a, standard_group(2));
    CHECK(vs21.classification == EquivClassReport::Classification::Distinct);

    const EquivClassReport vsprod = geom_equiv(a, product_group());
    CHECK(vsprod.classification == EquivClassReport::Classification::Distinct);

    const EquivClassReport prod = geom_equiv(product_group(), product_group());
    CHECK(prod.classification == EquivClassReport::Classification::StandardClass);
    CHECK(prod.k == 2);

    // two different groups sharing the class of N(2,1)
    RatMatrix m1(4, 4), m2(4, 4);
    m1(0, 1) = 1;
    m1(1, 0) = -1;
    m2(2, 3) = 2;
    m2(3, 2) = -2;
    const ClassTwoGroup scaled = make_group("scaled", 4, 2, {m1, m2});
    const EquivClassReport common = geom_equiv(product_group(), scaled);
    CHECK(common.classification == EquivClassReport::Classification::StandardClass);
    CHECK(common.k == 2);
    REQUIRE(common.supporting.size() == 4);
    for (const Verdict& v : common.supporting) CHECK(v.answer == Answer::Yes);
}

TEST_CASE("geom_equiv is symmetric") {
    const ClassTwoGroup a = example_group();
    const ClassTwoGroup p = product_group();
    const std::vector<std::pair<ClassTwoGroup, ClassTwoGroup>> pairs{
        {a, p}, {a, standard_group(4)}, {standard_group(2), standard_group(4)}, {p, p}};
    for (const auto& [x, y] : pairs)
        CHECK(geom_equiv(x, y).classification == geom_equiv(y, x).classification);
}

TEST_CASE("chain certificates satisfy both sides") {
    const Verdict chain = precedes(product_group(), standard_group(2));
    const auto* c = std::get_if<ChainWitness>(&chain.certificate);
    REQUIRE(c != nullptr);
    CHECK(approx_by_standard(product_group(), c->k).answer == Answer::Yes);
    CHECK(embeds_standard(standard_group(2), c->k).answer == Answer::Yes);
}

TEST_CASE("brute-force subspace oracle agrees with the procedure on small groups") {
    for (const ClassTwoGroup& g : {example_group(), product_group()}) {
        for (std::size_t k = 2; k <= g.dimV(); k += 2) {
            const auto oracle = nil2::testing::brute_force_subspace(g, k);
            const Verdict v = embeds_standard(g, k);
            if (oracle.has_value()) CHECK(v.answer == Answer::Yes);
            if (v.answer == Answer::No) CHECK(!oracle.has_value());
        }
    }
}

TEST_CASE("rank-2-center groups of odd dimension are handled") {
    // dimV = 5: the symbolic pfaffian of the full pencil does not exist, but
    // minors, loci and all decisions still do.
    RatMatrix m1(5, 5), m2(5, 5);
    m1(0, 1) = 1;
    m1(1, 0) = -1;
    m1(2, 3) = 1;
    m1(3, 2) = -1;
    m2(0, 2) = 1;
    m2(2, 0) = -1;
    m2(3, 4) = 1;
    m2(4, 3) = -1;
    const ClassTwoGroup g = make_group("odd", 5, 2, {m1, m2});

    const Verdict e2 = embeds_standard(g, 2);
    CHECK(e2.answer == Answer::Yes);
    const auto* w = std::get_if<SubspaceWitness>(&e2.certificate);
    REQUIRE(w != nullptr);
    CHECK(verify_subspace_witness(g, 2, *w));

    CHECK(approx_by_standard(g, 4).answer != Answer::UndeterminedOverQ);
    CHECK(iso_distinguish(g, g).kind == IsoOutcome::Kind::Isomorphic);
    CHECK(geom_equiv(g, g).classification != EquivClassReport::Classification::Distinct);
}

TEST_CASE("verdicts are deterministic") {
    const ClassTwoGroup a = example_group();
    const Verdict v1 = embeds_standard(a, 2);
    const Verdict v2 = embeds_standard(a, 2);
    const auto* w1 = std::get_if<SubspaceWitness>(&v1.certificate);
    const auto* w2 = std::get_if<SubspaceWitness>(&v2.certificate);
    REQUIRE(w1 != nullptr);
    REQUIRE(w2 != nullptr);
    CHECK(w1->basis == w2->basis);
    CHECK(v1.trace == v2.trace);
}

TEST_CASE("paper_example reproduces the expected data") {
    const PaperExampleReport r = paper_example();
    CHECK(r.pfaffian_form == BinaryForm(2, {1, 0, 0}));
    CHECK(r.pfaffian_form.to_string() == "l1^2");
    CHECK(r.det_form == BinaryForm(4, {1, 0, 0, 0, 0}));
    CHECK(r.det_form.to_string() == "l1^4");
    REQUIRE(r.locus_k2.points.size() == 1);
    CHECK(r.locus_k2.points[0].point == ProjPoint::infinity());
    CHECK(r.embed_k2.answer == Answer::Yes);
    CHECK(r.approx_k2.answer == Answer::No);
    CHECK(r.obstruction_k4.answer == Answer::No);
    CHECK(r.conclusion.classification == EquivClassReport::Classification::Distinct);
    CHECK(cites(r.conclusion.citations, "Proposition 2"));
    CHECK(cites(r.conclusion.citations, "Proposition 5"));
}
