#include "dehn/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dehn {

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Rational inv = Rational(1) / leading();
    return inv * *this;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> d(c_);
    for (auto& e : d) e = -e;
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(d));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(d));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> d(p.c_);
    for (auto& e : d) e *= s;
    return Polynomial(std::move(d));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = a;
    if (a.degree() < b.degree()) return {Polynomial(), rem};
    std::vector<Rational> q(a.degree() - b.degree() + 1);
    const Rational lead_inv = Rational(1) / b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = rem.degree() - b.degree();
        const Rational f = rem.leading() * lead_inv;
        q[shift] = f;
        std::vector<Rational> sub(shift + b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = f * b.c_[i];
        rem = rem - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::deflate(const Rational& root) const {
    auto [q, r] = divmod(*this, Polynomial::linear_root(root));
    if (!r.is_zero()) throw std::domain_error("deflate: not a root");
    return q;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        Rational a = c_[k];
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (k == 0 || a != Rational(1)) os << a.str();
        if (k > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// All positive divisors, by trial division. Desk-scale inputs only.
std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> primes, exps;
    Integer d = 2;
    while (d * d <= n) {
        if (n % d == 0) {
            Integer e = 0;
            while (n % d == 0) { n /= d; e += 1; }
            primes.push_back(d);
            exps.push_back(e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) { primes.push_back(n); exps.push_back(1); }
    std::vector<Integer> divs{1};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::size_t count = divs.size();
        Integer pk = 1;
        for (Integer e = 0; e < exps[i]; e += 1) {
            pk *= primes[i];
            for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Integer content cleared: coefficients of s scaled to coprime integers.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& s) {
    Integer lcm_den = 1;
    for (const auto& c : s.coefficients()) lcm_den = lcm(lcm_den, c.denominator());
    std::vector<Integer> out;
    out.reserve(s.coefficients().size());
    Integer g = 0;
    for (const auto& c : s.coefficients()) {
        Integer v = c.numerator() * (lcm_den / c.denominator());
        g = gcd(g, v);
        out.push_back(v);
    }
    if (g > 1)
        for (auto& v : out) v /= g;
    return out;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& p) {
    RationalRoots out;
    out.residual = p;
    if (p.is_zero() || p.is_constant()) return out;

    // Square-free part carries each root once and keeps the divisor search small.
    Polynomial sqfree = Polynomial::divmod(p, poly_gcd(p, p.derivative())).first;

    std::vector<Rational> candidates;
    std::vector<Integer> ic = primitive_integer_coeffs(sqfree);
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) candidates.push_back(Rational(0));
    if (low < ic.size()) {
        for (const Integer& num : divisors(ic[low]))
            for (const Integer& den : divisors(ic.back())) {
                candidates.emplace_back(num, den);
                candidates.emplace_back(-num, den);
            }
    }

    for (const Rational& r : candidates) {
        if (!sqfree(r).is_zero()) continue;
        if (out.residual(r).is_zero()) {
            int mult = 0;
            while (out.residual(r).is_zero()) {
                out.residual = out.residual.deflate(r);
                ++mult;
            }
            out.roots.emplace_back(r, mult);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace dehn
