#pragma once

// Univariate polynomials over Q and rational interval helpers.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lorenz {

using Integer = mpz_class;
using Rational = mpq_class;

struct RationalInterval {
    Rational lo;
    Rational hi;

    [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    [[nodiscard]] bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    [[nodiscard]] Rational width() const { return hi - lo; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);

// Dyadic rounding to `bits` significant bits, toward -inf / +inf.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);
// floor(log2 |q|) for q != 0.
long ilog2(const Rational& q);
// Parses "p", "p/q" or a decimal literal such as "-0.125".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly from_integers(std::span<const Integer> coeffs);
    static RatPoly constant(const Rational& c);
    static RatPoly monomial(std::size_t degree, const Rational& c = 1);

    // -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] const Rational& lead() const { return coeffs_.back(); }
    [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    [[nodiscard]] Rational eval(const Rational& x) const;
    [[nodiscard]] RationalInterval eval(const RationalInterval& x) const;
    [[nodiscard]] RatPoly derivative() const;
    [[nodiscard]] RatPoly monic() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rational& s, const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

// Extended Euclid: returns (g, s) with s*a = g (mod m), g monic gcd.
std::pair<RatPoly, RatPoly> half_gcdext(const RatPoly& a, const RatPoly& m);

// Number of distinct real roots of a squarefree p in the closed interval [lo, hi].
std::size_t count_roots(const RatPoly& p, const Rational& lo, const Rational& hi);

} // namespace lorenz
