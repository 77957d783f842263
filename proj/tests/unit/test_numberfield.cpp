#include <doctest.h>

#include "lorenz/error.hpp"
#include "lorenz/numberfield.hpp"

using namespace lorenz;

namespace {

FieldContext field_51()
{
    std::vector<Integer> p{-1, -1, 0, 0, 1};
    return field_new(p, 1, 2);
}

} // namespace

TEST_CASE("field_new isolates the root of x^4 - x - 1")
{
    FieldContext k = field_51();
    CHECK(k.degree() == 4);
    CHECK(k.generator().to_double() == doctest::Approx(1.2207440846).epsilon(1e-10));
}

TEST_CASE("linear polynomial gives a rational field")
{
    std::vector<Integer> p{-2, 1};
    FieldContext k = field_new(p, 1, 3);
    CHECK(k.degree() == 1);
    CHECK(k.generator().is_rational());
    CHECK(k.generator() == k.from_rational(2));
}

TEST_CASE("eighth root of two")
{
    std::vector<Integer> p{-2, 0, 0, 0, 0, 0, 0, 0, 1};
    FieldContext k = field_new(p, 1, 2);
    CHECK(k.generator().to_double() == doctest::Approx(1.0905077327).epsilon(1e-10));
}

TEST_CASE("field_new errors")
{
    std::vector<Integer> none{-1, -1, 0, 0, 1};
    CHECK_THROWS_AS(field_new(none, 2, 3), LorenzError);
    try {
        field_new(none, 2, 3);
    } catch (const LorenzError& e) {
        CHECK(e.kind() == ErrorKind::NoRootInInterval);
    }
    std::vector<Integer> two{-1, 0, 1};
    try {
        field_new(two, -2, 2);
        FAIL("expected MultipleRootsInInterval");
    } catch (const LorenzError& e) {
        CHECK(e.kind() == ErrorKind::MultipleRootsInInterval);
    }
    std::vector<Integer> sq{1, -2, 1};
    try {
        field_new(sq, 0, 2);
        FAIL("expected NonSquarefree");
    } catch (const LorenzError& e) {
        CHECK(e.kind() == ErrorKind::NonSquarefree);
    }
}

TEST_CASE("arithmetic in Q(beta), beta^4 = beta + 1")
{
    FieldContext k = field_51();
    FieldElement b = k.generator();
    CHECK((b * (k.one() / b)).coeffs() == k.one().coeffs());
    FieldElement lhs = k.one() - k.one() / b;
    FieldElement rhs = k.from_rational(2) - b * b * b;
    CHECK(lhs.coeffs() == rhs.coeffs());
    try {
        (void)(k.one() / k.zero());
        FAIL("expected DivisionByZero");
    } catch (const LorenzError& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("signs in the 51from4 field")
{
    FieldContext k = field_51();
    FieldElement b = k.generator();
    CHECK((b * b * b * b - b - k.one()).sign() == 0);
    FieldElement c = k.one() / (b * b);
    FieldElement alpha = k.one() - k.one() / b;
    CHECK((c - alpha).sign() == 1);
    RationalInterval iv = b.approx(34);
    CHECK(iv.lo >= Rational(122074408, 100000000));
    CHECK(iv.hi <= Rational(122074409, 100000000));
    CHECK(iv.width() <= Rational(1, Integer(1) << 34));
}

TEST_CASE("mixing fields is rejected")
{
    FieldContext k1 = field_51();
    FieldContext k2 = field_51();
    try {
        (void)(k1.one() + k2.one());
        FAIL("expected FieldMismatch");
    } catch (const LorenzError& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("reducible modulus splits to the factor vanishing at beta")
{
    // (x - 1)(x^8 - x^2 - 1) with the root of the octic near 1.1049.
    std::vector<Integer> p{1, -1, 1, -1, 0, 0, 0, 0, -1, 1};
    FieldContext k = field_new(p, Rational(11, 10), Rational(111, 100));
    CHECK(k.degree() == 9);
    FieldElement b = k.generator();
    FieldElement octic = b * b * b * b * b * b * b * b - b * b - k.one();
    CHECK(octic.sign() == 0);
    CHECK(k.degree() == 8);
    CHECK((b - k.one()).sign() == 1);
    CHECK_THROWS_AS((void)octic.inverse(), LorenzError);
}

TEST_CASE("inversion of a factor not vanishing at beta")
{
    std::vector<Integer> p{1, -1, 1, -1, 0, 0, 0, 0, -1, 1};
    FieldContext k = field_new(p, Rational(11, 10), Rational(111, 100));
    FieldElement b = k.generator();
    FieldElement inv = (b - k.one()).inverse();
    CHECK(k.degree() == 8);
    CHECK((inv * (b - k.one()) - k.one()).sign() == 0);
}

TEST_CASE("expression parser")
{
    FieldContext k = field_51();
    FieldElement a = k.parse("1 - 1/b");
    CHECK(a == k.from_coeffs({2, 0, 0, -1}));
    CHECK(k.parse("b^4") == k.parse("b+1"));
    CHECK_THROWS_AS((void)k.parse("b +"), LorenzError);
}

TEST_CASE("float mode")
{
    std::vector<Integer> p{-1, -1, 0, 0, 1};
    FieldContext k = FieldContext::create(p, 1, 2, 128);
    FieldElement b = k.generator();
    CHECK(b.to_double() == doctest::Approx(1.2207440846).epsilon(1e-10));
    CHECK((b * b * b * b - b - k.one()).sign() == 0);
    CHECK((b - k.one()).sign() == 1);
    FieldElement alpha = k.one() - k.one() / b;
    RationalInterval iv = alpha.approx(0);
    CHECK(iv.width() < Rational(1, Integer(1) << 100));
}
