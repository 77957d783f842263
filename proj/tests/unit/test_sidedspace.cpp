#include <doctest.h>

#include "maps.hpp"

using namespace lorenz;
using namespace testmaps;

TEST_CASE("sided order")
{
    LorenzMap f = map51();
    CHECK(sided_cmp(f.c_minus(), f.c_plus()) < 0);
    CHECK(sided_cmp(f.zero(), f.c_minus()) < 0);
    CHECK(sided_cmp(f.c_plus(), f.c_plus()) == 0);

    LorenzMap g = map3();
    SidedPoint p3 = iterate(g, g.zero(), 3);
    SidedPoint p5 = iterate(g, g.zero(), 5);
    CHECK(p3 < p5);
    CHECK(p3.value.to_double() == doctest::Approx(0.4571).epsilon(1e-3));
    CHECK(p5.value.to_double() == doctest::Approx(0.4803).epsilon(1e-3));
}

TEST_CASE("metric")
{
    LorenzMap f = map51();
    MetricValue same = metric_d(f, f.c_minus(), f.c_minus(), 10);
    CHECK(same.decided);
    CHECK(same.value.sign() == 0);
    MetricValue hole = metric_d(f, f.c_minus(), f.c_plus(), 10);
    CHECK(hole.decided);
    CHECK(hole.value == f.context().one());
    MetricValue ends = metric_d(f, f.zero(), f.one(), 0);
    CHECK(ends.decided);
    CHECK(ends.value == f.context().from_rational(2));
    MetricValue sym = metric_d(f, f.one(), f.zero(), 0);
    CHECK(sym.value == ends.value);
}

TEST_CASE("undecided metric returns a bracket")
{
    LorenzMap f = doubling();
    const FieldContext& k = f.context();
    SidedPoint a = SidedPoint::plain(k.from_rational(Rational(1, 1000)));
    SidedPoint b = SidedPoint::plain(k.from_rational(Rational(2, 1000)));
    MetricValue m = metric_d(f, a, b, 3);
    CHECK_FALSE(m.decided);
    CHECK(m.lower == k.from_rational(Rational(1, 1000)));
    CHECK(m.upper == k.from_rational(Rational(1, 1000) + Rational(1, 5)));
}
