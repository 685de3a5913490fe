#include "nil2/binary_form.hpp"

#include <algorithm>
#include <map>

#include "nil2/errors.hpp"

namespace nil2 {

namespace {

// Dense univariate polynomial over Q, coefficients ascending.
struct Poly {
    std::vector<Rational> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const Rational& lead() const { return c.back(); }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }
};

Poly make_poly(std::vector<Rational> coeffs) {
    Poly p{std::move(coeffs)};
    p.trim();
    return p;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.c.size(); ++i) d.c.push_back(Rational(Integer(i)) * p.c[i]);
    d.trim();
    return d;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return {};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

// Quotient and remainder of a/b over Q. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.zero()) throw Error("polynomial division by zero");
    Poly r = a;
    Poly q;
    if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, Rational(0));
    while (!r.zero() && r.deg() >= b.deg()) {
        const Rational f = r.lead() / b.lead();
        const std::size_t shift = r.deg() - b.deg();
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.zero()) throw Error("internal: polynomial division expected to be exact");
    return q;
}

Poly monic(Poly p) {
    if (p.zero()) return p;
    const Rational l = p.lead();
    for (auto& x : p.c) x /= l;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

// Primitive integer coefficients with positive leading coefficient; also
// returns nothing else (the scalar is irrelevant to factor structure).
std::vector<Integer> primitive_integer(const Poly& p) {
    Integer l = 1;
    for (const auto& x : p.c) l = lcm(l, den(x));
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& x : p.c) {
        Integer v = num(x * Rational(l));
        g = gcd(g, v);
        out.push_back(std::move(v));
    }
    if (g != 0)
        for (auto& v : out) v /= g;
    if (!out.empty() && out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

Poly from_integer(const std::vector<Integer>& c) {
    Poly p;
    for (const auto& v : c) p.c.push_back(Rational(v));
    p.trim();
    return p;
}

// Yun square-free decomposition; returns (square-free factor, multiplicity)
// pairs for the nonconstant factors.
std::vector<std::pair<Poly, int>> square_free(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.deg() < 1) return out;
    Poly dp = derivative(p);
    Poly g = poly_gcd(p, dp);
    if (g.deg() == 0) {
        out.emplace_back(monic(p), 1);
        return out;
    }
    Poly b = exact_quotient(p, g);
    Poly c = exact_quotient(dp, g);
    Poly d = make_poly([&] {
        Poly db = derivative(b);
        Poly t = c;
        if (t.c.size() < db.c.size()) t.c.resize(db.c.size());
        for (std::size_t i = 0; i < db.c.size(); ++i) t.c[i] -= db.c[i];
        return t.c;
    }());
    int i = 1;
    while (b.deg() > 0) {
        Poly a = poly_gcd(b, d);
        if (a.deg() > 0) out.emplace_back(a, i);
        b = exact_quotient(b, a);
        Poly cnext = exact_quotient(d, a);
        Poly db = derivative(b);
        Poly t = cnext;
        if (t.c.size() < db.c.size()) t.c.resize(db.c.size());
        for (std::size_t j = 0; j < db.c.size(); ++j) t.c[j] -= db.c[j];
        t.trim();
        d = t;
        ++i;
    }
    return out;
}

std::vector<Integer> signed_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (const Integer& d : positive_divisors(n)) {
        out.push_back(d);
        out.push_back(-d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Integer>& xs, const std::vector<Rational>& ys) {
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis{{Rational(1)}};
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = mul(basis, make_poly({Rational(-xs[j]), Rational(1)}));
            denom *= Rational(xs[i] - xs[j]);
        }
        const Rational f = ys[i] / denom;
        if (acc.c.size() < basis.c.size()) acc.c.resize(basis.c.size());
        for (std::size_t t = 0; t < basis.c.size(); ++t) acc.c[t] += f * basis.c[t];
    }
    acc.trim();
    return acc;
}

constexpr long long kKroneckerTupleBudget = 200000;
constexpr unsigned kKroneckerDegreeCap = 8;

// Bounded Kronecker factor search on a primitive integer polynomial that is
// square-free and has no rational roots. Returns factors plus a certification
// flag: true means the returned pieces are provably irreducible over Q.
void kronecker_split(const Poly& p, std::vector<Poly>& out, bool& certified) {
    const int d = p.deg();
    if (d <= 3) {  // no rational roots: degree 2 or 3 is automatically irreducible
        out.push_back(p);
        return;
    }
    if (static_cast<unsigned>(d) > kKroneckerDegreeCap) {
        out.push_back(p);
        certified = false;
        return;
    }
    for (int f = 2; 2 * f <= d; ++f) {
        std::vector<Integer> xs;
        for (int i = 0; static_cast<int>(xs.size()) < f + 1; ++i) {
            // 0, 1, -1, 2, -2, ...
            xs.push_back(i == 0 ? Integer(0) : (i % 2 ? Integer((i + 1) / 2) : Integer(-(i / 2))));
        }
        std::vector<std::vector<Integer>> divisor_sets;
        long long tuples = 1;
        bool feasible = true;
        for (const Integer& x : xs) {
            const Rational v = p.eval(Rational(x));
            if (num(v) == 0) throw Error("internal: unexpected rational root in kronecker_split");
            if (boost::multiprecision::abs(num(v)) > Integer("1000000000000")) {
                feasible = false;
                break;
            }
            divisor_sets.push_back(signed_divisors(num(v)));
            tuples *= static_cast<long long>(divisor_sets.back().size());
            if (tuples > kKroneckerTupleBudget) {
                feasible = false;
                break;
            }
        }
        if (!feasible) {
            out.push_back(p);
            certified = false;
            return;
        }
        std::vector<std::size_t> idx(xs.size(), 0);
        while (true) {
            std::vector<Rational> ys;
            for (std::size_t i = 0; i < xs.size(); ++i)
                ys.push_back(Rational(divisor_sets[i][idx[i]]));
            Poly candidate = interpolate(xs, ys);
            if (candidate.deg() == f && candidate.lead() > 0) {
                bool integral = true;
                for (const auto& c : candidate.c)
                    if (!is_integer(c)) {
                        integral = false;
                        break;
                    }
                if (integral) {
                    auto [q, r] = divmod(p, candidate);
                    if (r.zero()) {
                        // f is minimal, so the candidate is irreducible.
                        out.push_back(from_integer(primitive_integer(candidate)));
                        kronecker_split(from_integer(primitive_integer(q)), out, certified);
                        return;
                    }
                }
            }
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == divisor_sets[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    out.push_back(p);  // no factor of any degree <= d/2: irreducible
}

}  // namespace

ProjPoint::ProjPoint(const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) throw Error("projective point needs a nonzero coordinate");
    if (a != 0) {
        a_ = 1;
        b_ = b / a;
    } else {
        a_ = 0;
        b_ = 1;
    }
}

bool ProjPoint::operator<(const ProjPoint& other) const {
    if (a_ != other.a_) return a_ < other.a_;  // [0 : 1] sorts before finite points
    return b_ < other.b_;
}

std::string ProjPoint::to_string() const {
    return "[" + nil2::to_string(a_) + " : " + nil2::to_string(b_) + "]";
}

BinaryForm::BinaryForm(std::size_t degree, std::vector<Rational> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
    if (c_.size() != degree_ + 1)
        throw DimensionMismatch("binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::constant(const Rational& c) { return BinaryForm(0, {c}); }

BinaryForm BinaryForm::linear(const Rational& c1, const Rational& c2) {
    return BinaryForm(1, {c1, c2});
}

bool BinaryForm::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

Rational BinaryForm::eval(const Rational& l1, const Rational& l2) const {
    std::vector<Rational> pow1(degree_ + 1);
    pow1[0] = 1;
    for (std::size_t i = 1; i <= degree_; ++i) pow1[i] = pow1[i - 1] * l1;
    Rational v = 0;
    Rational p2 = 1;
    for (std::size_t i = 0; i <= degree_; ++i) {
        v += c_[i] * pow1[degree_ - i] * p2;
        p2 *= l2;
    }
    return v;
}

BinaryForm BinaryForm::operator+(const BinaryForm& other) const {
    if (degree_ != other.degree_) throw DimensionMismatch("binary form addition: degrees differ");
    BinaryForm out(degree_);
    for (std::size_t i = 0; i <= degree_; ++i) out.c_[i] = c_[i] + other.c_[i];
    return out;
}

BinaryForm BinaryForm::operator-(const BinaryForm& other) const {
    if (degree_ != other.degree_)
        throw DimensionMismatch("binary form subtraction: degrees differ");
    BinaryForm out(degree_);
    for (std::size_t i = 0; i <= degree_; ++i) out.c_[i] = c_[i] - other.c_[i];
    return out;
}

BinaryForm BinaryForm::operator*(const BinaryForm& other) const {
    BinaryForm out(degree_ + other.degree_);
    for (std::size_t i = 0; i <= degree_; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j <= other.degree_; ++j) out.c_[i + j] += c_[i] * other.c_[j];
    }
    return out;
}

BinaryForm BinaryForm::operator*(const Rational& s) const {
    BinaryForm out(degree_);
    for (std::size_t i = 0; i <= degree_; ++i) out.c_[i] = c_[i] * s;
    return out;
}

BinaryForm BinaryForm::normalized() const {
    if (is_zero()) return *this;
    Integer l = 1;
    for (const auto& c : c_) l = lcm(l, den(c));
    Integer g = 0;
    for (const auto& c : c_) g = nil2::gcd(g, num(c * Rational(l)));
    Rational scale = Rational(l) / Rational(g);
    for (const auto& c : c_) {
        if (c != 0) {
            if (c * scale < 0) scale = -scale;
            break;
        }
    }
    return *this * scale;
}

bool BinaryForm::proportional_to(const BinaryForm& other) const {
    if (degree_ != other.degree_) return false;
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    return normalized() == other.normalized();
}

namespace {
std::string monomial(std::size_t e1, std::size_t e2) {
    std::string s;
    if (e1 > 0) s += e1 == 1 ? "l1" : "l1^" + std::to_string(e1);
    if (e2 > 0) {
        if (!s.empty()) s += "*";
        s += e2 == 1 ? "l2" : "l2^" + std::to_string(e2);
    }
    return s;
}
}  // namespace

std::string BinaryForm::to_string() const {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i <= degree_; ++i) {
        if (c_[i] == 0) continue;
        const std::string mono = monomial(degree_ - i, i);
        if (mono.empty())
            terms.push_back(nil2::to_string(c_[i]));
        else if (c_[i] == 1)
            terms.push_back(mono);
        else if (c_[i] == -1)
            terms.push_back("-" + mono);
        else
            terms.push_back(nil2::to_string(c_[i]) + "*" + mono);
    }
    if (terms.empty()) return "0";
    std::string s = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) s += " + " + terms[i];
    return s;
}

std::string BinaryForm::to_string_full() const {
    std::string s;
    for (std::size_t i = 0; i <= degree_; ++i) {
        if (i) s += " + ";
        const std::string mono = monomial(degree_ - i, i);
        s += nil2::to_string(c_[i]);
        if (!mono.empty()) s += "*" + mono;
    }
    return s;
}

namespace {

// f <-> (u, e) with f = l1^e * homogenization of u, u(t) = f(1, t).
std::pair<Poly, std::size_t> dehomogenize(const BinaryForm& f) {
    Poly u = make_poly(f.coeffs());
    const std::size_t e = f.degree() - static_cast<std::size_t>(u.deg() < 0 ? f.degree() : u.deg());
    return {u, u.zero() ? 0 : e};
}

BinaryForm homogenize(const Poly& u, std::size_t extra_l1_power) {
    if (u.zero()) return BinaryForm::constant(0);
    BinaryForm out(static_cast<std::size_t>(u.deg()) + extra_l1_power);
    std::vector<Rational> c(out.degree() + 1);
    for (std::size_t i = 0; i < u.c.size(); ++i) c[i] = u.c[i];
    return BinaryForm(out.degree(), std::move(c));
}

}  // namespace

BinaryForm BinaryForm::gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    auto [uf, ef] = dehomogenize(f);
    auto [ug, eg] = dehomogenize(g);
    Poly d = poly_gcd(uf, ug);
    return homogenize(d, std::min(ef, eg)).normalized();
}

BinaryRoots binary_rational_roots(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroForm("binary_rational_roots: zero form");
    auto [u, e_inf] = dehomogenize(f);

    BinaryRoots out{{}, BinaryForm::constant(1)};
    if (e_inf > 0) out.roots.push_back({ProjPoint::infinity(), static_cast<int>(e_inf)});

    // Root at t = 0 (the point [1 : 0]).
    std::size_t v = 0;
    while (v < u.c.size() && u.c[v] == 0) ++v;
    if (v > 0) {
        out.roots.push_back({ProjPoint(1, 0), static_cast<int>(v)});
        u.c.erase(u.c.begin(), u.c.begin() + static_cast<long>(v));
    }

    if (u.deg() >= 1) {
        const std::vector<Integer> ic = primitive_integer(u);
        std::vector<Rational> candidates;
        for (const Integer& p : positive_divisors(ic.front()))
            for (const Integer& q : positive_divisors(ic.back())) {
                if (gcd(p, q) != 1) continue;
                candidates.push_back(Rational(p) / Rational(q));
                candidates.push_back(-(Rational(p) / Rational(q)));
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Rational& r : candidates) {
            int mult = 0;
            while (u.deg() >= 1 && u.eval(r) == 0) {
                u = exact_quotient(u, make_poly({-r, Rational(1)}));
                ++mult;
            }
            if (mult > 0) out.roots.push_back({ProjPoint(1, r), mult});
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const BinaryRoot& x, const BinaryRoot& y) { return x.point < y.point; });
    out.leftover = homogenize(u, 0).normalized();
    return out;
}

std::vector<BinaryFactor> factor_binary(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroForm("factor_binary: zero form");
    const BinaryRoots roots = binary_rational_roots(f);

    std::vector<BinaryFactor> out;
    for (const auto& [point, mult] : roots.roots) {
        // Root [a : b] corresponds to the linear form b*l1 - a*l2.
        BinaryForm lin = BinaryForm::linear(point.b(), -point.a()).normalized();
        out.push_back({lin, mult, true, true});
    }

    if (roots.leftover.degree() >= 1 && !roots.leftover.is_zero()) {
        auto [u, e_inf] = dehomogenize(roots.leftover);
        (void)e_inf;  // leftover has no rational roots, so no l1 power remains
        for (const auto& [sqfree, mult] : square_free(u)) {
            std::vector<Poly> pieces;
            bool certified = true;
            kronecker_split(from_integer(primitive_integer(sqfree)), pieces, certified);
            for (const Poly& piece : pieces)
                out.push_back({homogenize(piece, 0).normalized(), mult, false, certified});
        }
    }
    return out;
}

}  // namespace nil2
