#pragma once

// Exact arithmetic in Q(beta) for a real root beta of an integer polynomial.
//
// The modulus may be reducible. Whenever an inversion or a zero test meets a
// nontrivial factor, the context shrinks its modulus to the factor that
// vanishes at beta, so the set of representable values never changes.

#include "lorenz/ratpoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lorenz {

class FieldElement;

class FieldContext {
public:
    FieldContext() = default;

    // float_bits > 0 selects interval mode: elements carry dyadic intervals
    // rounded outward to that many significant bits.
    static FieldContext create(std::span<const Integer> poly, const Rational& lo, const Rational& hi,
                               unsigned float_bits = 0);
    // Degree-1 context whose elements are plain rationals.
    static FieldContext rationals(unsigned float_bits = 0);

    [[nodiscard]] FieldElement zero() const;
    [[nodiscard]] FieldElement one() const;
    [[nodiscard]] FieldElement generator() const;
    [[nodiscard]] FieldElement from_rational(const Rational& q) const;
    // Coefficients of a polynomial in beta, low degree first.
    [[nodiscard]] FieldElement from_coeffs(const std::vector<Rational>& coeffs) const;
    // Parses an expression in the generator `b` such as "(1-b+b^3)/(b^3+b^4)".
    [[nodiscard]] FieldElement parse(const std::string& expr) const;

    [[nodiscard]] const RatPoly& defining_poly() const;
    [[nodiscard]] RatPoly modulus() const;
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool is_float() const;
    [[nodiscard]] unsigned float_bits() const;
    // Isolating interval of beta refined to width <= 2^-bits.
    [[nodiscard]] RationalInterval root_interval(unsigned bits) const;
    [[nodiscard]] bool valid() const { return impl_ != nullptr; }

    friend bool operator==(const FieldContext& a, const FieldContext& b) { return a.impl_ == b.impl_; }

    struct Impl;

private:
    explicit FieldContext(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
    friend class FieldElement;
};

FieldContext field_new(std::span<const Integer> poly, const Rational& lo, const Rational& hi);

class FieldElement {
public:
    FieldElement() = default;

    [[nodiscard]] const FieldContext& context() const { return ctx_; }
    // Coefficient vector reduced modulo the current modulus, padded to its degree.
    [[nodiscard]] std::vector<Rational> coeffs() const;
    [[nodiscard]] bool is_rational() const;

    // -1, 0 or +1; exact in exact mode.
    [[nodiscard]] int sign() const;
    // Certified enclosure of width <= 2^-bits (float mode returns its own interval).
    [[nodiscard]] RationalInterval approx(unsigned bits) const;
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

private:
    FieldElement(FieldContext ctx, RatPoly value) : ctx_(std::move(ctx)), value_(std::move(value)) {}
    FieldElement(FieldContext ctx, RationalInterval iv) : ctx_(std::move(ctx)), iv_(std::move(iv)) {}

    FieldContext ctx_;
    RatPoly value_;
    RationalInterval iv_;
    friend class FieldContext;
};

int compare(const FieldElement& a, const FieldElement& b);
inline bool operator==(const FieldElement& a, const FieldElement& b) { return compare(a, b) == 0; }
inline bool operator<(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }
inline bool operator<=(const FieldElement& a, const FieldElement& b) { return compare(a, b) <= 0; }
inline bool operator>(const FieldElement& a, const FieldElement& b) { return compare(a, b) > 0; }
inline bool operator>=(const FieldElement& a, const FieldElement& b) { return compare(a, b) >= 0; }

FieldElement abs(const FieldElement& a);

} // namespace lorenz
