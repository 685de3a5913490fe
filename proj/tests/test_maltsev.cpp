#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nil2/errors.hpp"
#include "nil2/maltsev.hpp"
#include "oracles.hpp"

using namespace nil2;
using nil2::testing::Rng;

namespace {

// Random word in fractional powers of the generators, with the product of
// the letter denominators reported (the containment bound from the witness
// word representation).
Word random_word(Rng& rng, std::size_t n, int max_letters, long max_den, Integer* product) {
    Word w;
    const int letters = 1 + static_cast<int>(rng.intv(0, max_letters - 1));
    for (int t = 0; t < letters; ++t) {
        const long num = rng.intv(-3, 3);
        const long den = rng.intv(1, max_den);
        const Rational q = Rational(num == 0 ? 1 : num) / den;
        w.push_back({WordLetter::Kind::Generator, static_cast<std::size_t>(rng.intv(0, n - 1)), 0,
                     q});
        *product *= Integer(nil2::den(q));
    }
    return w;
}

}  // namespace

TEST_CASE("free_group") {
    const FreeClassTwo f2 = free_group(2);
    CHECK(f2.group().dimV() == 2);
    CHECK(f2.group().dimW() == 1);
    CHECK(f2.group().pencil().coord(0).matrix() == RatMatrix::from_rows({{0, 1}, {-1, 0}}));

    const FreeClassTwo f3 = free_group(3);
    CHECK(f3.group().dimV() == 3);
    CHECK(f3.group().dimW() == 3);
    CHECK(f3.pair_index(0, 1) == 0);
    CHECK(f3.pair_index(0, 2) == 1);
    CHECK(f3.pair_index(1, 2) == 2);
    CHECK(f3.pair_at(2) == std::pair<std::size_t, std::size_t>{1, 2});

    CHECK_THROWS_AS(free_group(1), TooFewGenerators);
}

TEST_CASE("word evaluation and printing") {
    const FreeClassTwo f = free_group(2);
    const Word w{{WordLetter::Kind::Generator, 0, 0, Rational(1, 2)},
                 {WordLetter::Kind::Generator, 1, 0, Rational(1, 3)},
                 {WordLetter::Kind::Central, 0, 1, Rational(5)}};
    CHECK(word_to_string(w) == "x1^(1/2)*x2^(1/3)*c(1,2)^(5)");
    const LieElement g = eval_word(f, w);
    CHECK(g.v() == RatVec{Rational(1, 2), Rational(1, 3)});
    CHECK(g.w() == RatVec{Rational(1, 12) + 5});
}

TEST_CASE("hk_membership on the named examples") {
    const FreeClassTwo f = free_group(2);
    const LieElement g =
        bch_mul(bch_pow(f.generator(0), Rational(1, 2)), bch_pow(f.generator(1), Rational(1, 3)));

    const auto witness = hk_membership(f, g, 6);
    REQUIRE(witness.has_value());
    REQUIRE(witness->expression.size() >= 2);
    CHECK(witness->expression[0].exponent == Rational(1, 2));
    CHECK(witness->expression[1].exponent == Rational(1, 3));
    CHECK(eval_word(f, witness->expression) == g);

    // a generator itself lies in H_1
    const auto w1 = hk_membership(f, f.generator(0), 1);
    REQUIRE(w1.has_value());
    CHECK(eval_word(f, w1->expression) == f.generator(0));

    // fractional v-coordinate obstructs H_1 membership
    CHECK(!hk_membership(f, bch_pow(f.generator(0), Rational(1, 2)), 1));
}

TEST_CASE("the half-correction case: x1*x2 with trivial center coordinate") {
    const FreeClassTwo f = free_group(2);
    // (e1 + e2; 0) = x1 x2 c^(-1/2): integral coordinates but NOT in H_1
    const LieElement g = f.group().element({1, 1}, {0});
    CHECK(!hk_membership(f, g, 1));
    const auto w2 = hk_membership(f, g, 2);
    REQUIRE(w2.has_value());
    CHECK(eval_word(f, w2->expression) == g);
    CHECK(lemma_bound(f, {g}) == 2);
}

TEST_CASE("hk witnesses re-evaluate and memberships are monotone") {
    Rng rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const FreeClassTwo f = free_group(n);
        const long k = rng.intv(1, 6);
        // sample an H_k element as a word in the k-th roots
        LieElement g = f.group().identity();
        for (int t = 0; t < 4; ++t)
            g = bch_mul(g, bch_pow(f.generator(static_cast<std::size_t>(rng.intv(0, n - 1))),
                                   Rational(rng.intv(-3, 3)) / k));
        const auto witness = hk_membership(f, g, k);
        REQUIRE(witness.has_value());
        CHECK(eval_word(f, witness->expression) == g);
        for (const WordLetter& letter : witness->expression) {
            if (letter.kind == WordLetter::Kind::Generator)
                CHECK(Integer(k) % den(letter.exponent) == 0);
            else
                CHECK(Integer(k) * Integer(k) % den(letter.exponent) == 0);
        }
        // H_k is contained in H_{km}
        CHECK(hk_membership(f, g, k * rng.intv(1, 4)).has_value());
    }
}

TEST_CASE("lemma_bound on the named examples") {
    const FreeClassTwo f = free_group(2);
    const LieElement a = bch_pow(f.generator(0), Rational(1, 2));
    const LieElement b = bch_pow(f.generator(1), Rational(1, 3));
    const Integer k = lemma_bound(f, {a, b});
    CHECK(Integer(6) % k == 0);
    CHECK(hk_membership(f, a, k));
    CHECK(hk_membership(f, b, k));

    CHECK(lemma_bound(f, {f.generator(0), f.generator(1)}) == 1);
}

TEST_CASE("lemma_bound certifies random word subgroups and divides the product bound") {
    Rng rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const FreeClassTwo f = free_group(n);
        Integer product = 1;
        std::vector<LieElement> gens;
        for (int i = 0; i < 5; ++i)
            gens.push_back(eval_word(f, random_word(rng, n, 4, 12, &product)));
        const Integer k = lemma_bound(f, gens);
        for (const LieElement& g : gens) CHECK(hk_membership(f, g, k).has_value());
        CHECK(product % k == 0);  // divides the word-denominator product bound
    }
}

TEST_CASE("root_endomorphism") {
    const FreeClassTwo f = free_group(2);

    const GroupHom e2 = root_endomorphism(f, 2);
    CHECK(e2.apply(bch_pow(f.generator(0), Rational(1, 2))) == f.generator(0));

    const GroupHom e1 = root_endomorphism(f, 1);
    CHECK(e1.phi() == RatMatrix::identity(2));

    // the central basis element [x1,x2] scales by k^2
    const GroupHom e3 = root_endomorphism(f, 3);
    CHECK(e3.apply(f.central_basis(0, 1)) == bch_pow(f.central_basis(0, 1), 9));

    for (long k : {1L, 2L, 3L, 6L}) CHECK(root_endomorphism(f, k).injective());
}

TEST_CASE("integral elements always land in some H_k") {
    Rng rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const FreeClassTwo f = free_group(n);
        Integer product = 1;
        const LieElement g = eval_word(f, random_word(rng, n, 5, 10, &product));
        const Integer k = lemma_bound(f, {g});
        const auto witness = hk_membership(f, g, k);
        REQUIRE(witness.has_value());
        CHECK(eval_word(f, witness->expression) == g);
    }
}
