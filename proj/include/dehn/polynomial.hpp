#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dehn/rational.hpp"

namespace dehn {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Rational& r) { return Polynomial({r}); }
    /// The monomial t.
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }
    /// (t - root)
    static Polynomial linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Synthetic division by (t - root); requires root to be a root.
    Polynomial deflate(const Rational& root) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd (Euclid); gcd(0,0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// All rational roots with multiplicities, plus the residual factor with no
/// rational roots. Candidates come from the rational-root theorem applied to
/// the square-free part after clearing denominators.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;  // sorted ascending
    Polynomial residual;
};
RationalRoots rational_roots(const Polynomial& p);

}  // namespace dehn
