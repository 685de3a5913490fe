#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nil2/group.hpp"

namespace nil2 {

// Free class-2 object on n generators: dimV = n, dimW = n(n-1)/2, bracket
// coordinates the elementary skew matrices. Central basis c(i,j) = [x_i, x_j]
// for i < j in lexicographic order.
class FreeClassTwo {
public:
    explicit FreeClassTwo(std::size_t n);  // throws TooFewGenerators for n < 2

    std::size_t generator_count() const { return n_; }
    const ClassTwoGroup& group() const { return g_; }

    LieElement generator(std::size_t i) const;  // x_{i+1}, 0-based index
    LieElement central_basis(std::size_t i, std::size_t j) const;
    std::size_t pair_index(std::size_t i, std::size_t j) const;  // i < j, 0-based
    std::pair<std::size_t, std::size_t> pair_at(std::size_t t) const;

private:
    std::size_t n_;
    ClassTwoGroup g_;
};

FreeClassTwo free_group(std::size_t n);

// One letter of a group word: a fractional power of a generator x_i or of a
// central basis element c(i,j).
struct WordLetter {
    enum class Kind { Generator, Central };
    Kind kind;
    std::size_t i = 0, j = 0;  // 0-based; j used only for central letters
    Rational exponent;
};
using Word = std::vector<WordLetter>;

LieElement eval_word(const FreeClassTwo& f, const Word& word);
std::string word_to_string(const Word& word);  // "x1^(1/2)*x2^(1/3)*c(1,2)^(5)"

// Membership certificate for g in H_k = <x_1^(1/k), ..., x_n^(1/k)>: a word
// whose generator exponents have denominator dividing k and whose central
// exponents have denominator dividing k^2, evaluating back to g.
struct LatticeWitness {
    LieElement element;
    Integer k;
    Word expression;
};

// Decides g in H_k by lattice arithmetic on normal-form exponents: the
// v-coordinates must lie in (1/k)Z and the central corrections
// w_ij - (1/2) v_i v_j in (1/k^2)Z. Throws GroupMismatch.
std::optional<LatticeWitness> hk_membership(const FreeClassTwo& f, const LieElement& g,
                                            const Integer& k);

// Smallest k (in the divisibility order) with every listed element in H_k.
// Divides every bound that works, in particular the product of the letter
// denominators of any word expressions for the generators.
Integer lemma_bound(const FreeClassTwo& f, const std::vector<LieElement>& generators);

// The endomorphism x_i -> x_i^k of the completion: phi = k id, psi = k^2 id.
// Injective for every k >= 1; maps H_k into the integral subgroup H_1.
GroupHom root_endomorphism(const FreeClassTwo& f, const Integer& k);

}  // namespace nil2
