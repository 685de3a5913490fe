#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nil2 {

// Exact arbitrary-precision scalars. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant the
// rest of the library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

// den == 0 is an error; sign is normalized by cpp_rational itself.
Rational make_rational(const Integer& numerator, const Integer& denominator);

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Text syntax: optional sign, decimal integer, optional "/" followed by a
// positive decimal integer ("-3/7", "2"). Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// lcm of the denominators of a list of rationals (1 for an empty list).
Integer denominator_lcm(const std::vector<Rational>& values);

// Prime factorization by trial division; desk-scale inputs only.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);

// All positive divisors of |n|, ascending. n must be nonzero.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace nil2
