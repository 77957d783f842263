#include <doctest.h>

#include "lorenz/error.hpp"
#include "lorenz/kneading.hpp"
#include "maps.hpp"

using namespace lorenz;
using namespace testmaps;

TEST_CASE("canonical form of eventually periodic words")
{
    KneadingWord w = KneadingWord::parse("100101(01100101)*");
    CHECK(w.to_string() == "(10010101)*");
    CHECK(KneadingWord::periodic("", "0101").to_string() == "(01)*");
    CHECK(KneadingWord::periodic("1", "0").to_string() == "1(0)*");
    CHECK(w == KneadingWord::parse("(10010101)*"));
    CHECK(w.shift(3).to_string() == "(10101100)*");
    CHECK_THROWS_AS(KneadingWord::parse("(1000)*x"), LorenzError);
    CHECK_THROWS_AS(KneadingWord::parse("1(0"), LorenzError);
    CHECK_THROWS_AS(KneadingWord::parse("10x..."), LorenzError);
}

TEST_CASE("word comparison")
{
    auto a = KneadingWord::parse("(01)*");
    auto b = KneadingWord::parse("(10)*");
    CHECK(compare_words(a, b) == -1);
    CHECK(compare_words(b, a) == 1);
    CHECK(compare_words(KneadingWord::parse("0(1)*"), KneadingWord::parse("(1)*")) == -1);
    CHECK_FALSE(compare_words(KneadingWord::parse("101..."), KneadingWord::parse("(10)*")).has_value());
    CHECK(compare_words(KneadingWord::parse("100..."), KneadingWord::parse("(10)*")) == -1);
}

TEST_CASE("kneading invariant of ex3")
{
    LorenzMap f = map3();
    KneadingInvariant k = kneading_invariant(f, 200);
    CHECK(k.plus == KneadingWord::parse("100101(01100101)*"));
    CHECK(k.minus == KneadingWord::parse("01100101(100101)*"));
    CHECK(k.plus.bit(0) == 1);
    CHECK(k.minus.bit(0) == 0);
}

TEST_CASE("kneading invariant of 51from4")
{
    LorenzMap f = map51();
    KneadingInvariant k = kneading_invariant(f, 200);
    CHECK(k.plus.to_string() == "(1000)*");
    // f(1) ~ 0.4016 lies left of c ~ 0.6710, so the third symbol is 0.
    CHECK(k.minus.to_string() == "(010)*");
    CHECK(admissibility_check(k.plus, k.minus).verdict == Admissibility::Admissible);
}

TEST_CASE("admissibility")
{
    LorenzMap f = map3();
    KneadingInvariant k = kneading_invariant(f, 200);
    CHECK(admissibility_check(k.plus, k.minus).verdict == Admissibility::Admissible);

    auto bad = admissibility_check(KneadingWord::parse("(1)*"), KneadingWord::parse("(0)*"));
    CHECK(bad.verdict == Admissibility::Inadmissible);
    CHECK(bad.witness == 1);

    auto bad2 = admissibility_check(KneadingWord::parse("(10)*"), KneadingWord::parse("(01)*"));
    CHECK(bad2.verdict == Admissibility::Inadmissible);
    CHECK(bad2.witness == 2);

    auto trunc = admissibility_check(KneadingWord::parse("1000..."), KneadingWord::parse("0111..."));
    CHECK(trunc.verdict == Admissibility::UndecidableTruncated);
}

TEST_CASE("renormalization by factorization")
{
    LorenzMap f = map3();
    KneadingInvariant k = kneading_invariant(f, 200);
    auto fs = renorm_factorization(k.plus, k.minus, 8, 8);
    bool has86 = false;
    bool has22 = false;
    for (const auto& x : fs) {
        if (x.l == 8 && x.r == 6) {
            has86 = x.w_minus == "01100101" && x.w_plus == "100101";
        }
        if (x.l == 2 && x.r == 2) {
            has22 = x.w_minus == "01" && x.w_plus == "10";
        }
    }
    CHECK(has86);
    CHECK(has22);

    CHECK(renorm_factorization(KneadingWord::parse("1(0)*"), KneadingWord::parse("0(1)*"), 8, 8).empty());
}
