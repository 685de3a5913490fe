#include "nil2/rational.hpp"

#include <algorithm>
#include <cctype>

#include "nil2/errors.hpp"

namespace nil2 {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw Error("zero denominator");
    return Rational(numerator) / Rational(denominator);
}

std::optional<Rational> parse_rational(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };

    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t numEnd = digits(i);
    if (numEnd == i) return std::nullopt;
    Integer numer(std::string(text.substr(i, numEnd - i)));
    if (negative) numer = -numer;
    i = numEnd;

    Integer denom = 1;
    if (i < n && text[i] == '/') {
        ++i;
        std::size_t denEnd = digits(i);
        if (denEnd == i) return std::nullopt;
        denom = Integer(std::string(text.substr(i, denEnd - i)));
        if (denom <= 0) return std::nullopt;
        i = denEnd;
    }
    if (i != n) return std::nullopt;
    return Rational(numer) / Rational(denom);
}

std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

std::string to_string(const Integer& n) { return n.str(); }

Integer denominator_lcm(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& q : values) l = lcm(l, den(q));
    return l;
}

std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw Error("factorize: zero input");
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer p = 2;
    long long steps = 0;
    while (p * p <= n) {
        if (++steps > 50'000'000) throw Error("factorize: input too large");
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    auto factors = factorize(n);
    std::vector<Integer> divisors{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divisors.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace nil2
