#pragma once

#include <string>
#include <vector>

#include "nil2/rational.hpp"

namespace nil2 {

// Point of the rational projective line, stored so that the first nonzero
// coordinate equals 1. Two points are equal iff proportional.
class ProjPoint {
public:
    ProjPoint(const Rational& a, const Rational& b);
    static ProjPoint infinity() { return ProjPoint(0, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool operator==(const ProjPoint& other) const = default;
    // Deterministic ordering: [0 : 1] first, then by slope.
    bool operator<(const ProjPoint& other) const;

    std::string to_string() const;  // "[a : b]"

private:
    Rational a_, b_;
};

// Homogeneous polynomial in two variables l1, l2 over Q. coeff(i) multiplies
// l1^(degree-i) * l2^i. The zero form of any degree is representable and
// reports is_zero().
class BinaryForm {
public:
    BinaryForm() : degree_(0), c_(1) {}
    explicit BinaryForm(std::size_t degree) : degree_(degree), c_(degree + 1) {}
    BinaryForm(std::size_t degree, std::vector<Rational> coeffs);

    static BinaryForm constant(const Rational& c);
    static BinaryForm linear(const Rational& c1, const Rational& c2);  // c1*l1 + c2*l2

    std::size_t degree() const { return degree_; }
    const Rational& coeff(std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;

    Rational eval(const Rational& l1, const Rational& l2) const;

    BinaryForm operator+(const BinaryForm& other) const;  // degrees must agree
    BinaryForm operator-(const BinaryForm& other) const;
    BinaryForm operator*(const BinaryForm& other) const;
    BinaryForm operator*(const Rational& s) const;
    bool operator==(const BinaryForm& other) const = default;

    // Scalar-normalized copy: primitive integer coefficients, first nonzero
    // coefficient positive. The zero form normalizes to itself.
    BinaryForm normalized() const;
    bool proportional_to(const BinaryForm& other) const;

    std::string to_string() const;       // zero terms and unit coefficients suppressed
    std::string to_string_full() const;  // every monomial with an explicit coefficient

    static BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

private:
    std::size_t degree_;
    std::vector<Rational> c_;
};

struct BinaryRoot {
    ProjPoint point;
    int multiplicity;
};

struct BinaryRoots {
    std::vector<BinaryRoot> roots;  // complete list of rational projective roots
    BinaryForm leftover;            // scalar-normalized cofactor without rational roots
};

// All rational projective roots of f with multiplicities, by rational root
// extraction of the dehomogenization plus the point at infinity. The product
// of the corresponding linear factors times `leftover` equals f up to a
// rational scalar. Throws ZeroForm on the zero form.
BinaryRoots binary_rational_roots(const BinaryForm& f);

struct BinaryFactor {
    BinaryForm form;
    int multiplicity;
    bool linear;
    bool certified_irreducible;
};

// Factorization of f over Q into linear factors and non-linear pieces.
// Pieces are certified irreducible when the bounded Kronecker search
// exhausts; otherwise they are returned with certified_irreducible = false.
// The product of all factors (with multiplicities) is f up to a scalar.
std::vector<BinaryFactor> factor_binary(const BinaryForm& f);

}  // namespace nil2
