#include <doctest.h>

#include "lorenz/cycles.hpp"
#include "lorenz/error.hpp"
#include "lorenz/renorm.hpp"
#include "maps.hpp"

using namespace lorenz;
using namespace testmaps;

namespace {

std::vector<std::pair<int, int>> pairs(const RenormSearch& s)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& g : s.valid) {
        out.emplace_back(g.l, g.r);
    }
    return out;
}

using PairList = std::vector<std::pair<int, int>>;

} // namespace

TEST_CASE("51from4 admits the (4,3) renormalization")
{
    LorenzMap f = map51();
    RenormCheck chk = validate_renorm(f, 4, 3);
    CHECK(chk.valid);
    CHECK(chk.g.v == f.context().one());
    CHECK(chk.g.u == f.f1());
    CHECK(chk.g.expanding);
    CHECK(pairs(search_renorms(f, 8, 8)) == PairList{{4, 3}});
}

TEST_CASE("ex4 renormalizations are nested")
{
    LorenzMap f = map4();
    RenormSearch s = search_renorms(f, 8, 8);
    CHECK(pairs(s) == PairList{{2, 2}, {4, 4}, {8, 8}});
    REQUIRE(s.unique_minimum.has_value());
    CHECK(*s.unique_minimum == std::make_pair(2, 2));
}

TEST_CASE("ex5_2 renormalizations and the failed (2,2)")
{
    LorenzMap f = map52();
    RenormCheck bad = validate_renorm(f, 2, 2);
    CHECK_FALSE(bad.valid);
    CHECK(!bad.reason.empty());
    RenormSearch s = search_renorms(f, 5, 5);
    CHECK(pairs(s) == PairList{{3, 2}, {5, 5}});
    CHECK(s.pareto_minimal == PairList{{3, 2}});
    REQUIRE(s.unique_minimum.has_value());
    CHECK(*s.unique_minimum == std::make_pair(3, 2));
}

TEST_CASE("ex3 renormalizations up to 8")
{
    LorenzMap f = map3();
    RenormSearch s = search_renorms(f, 8, 8);
    CHECK(pairs(s) == PairList{{2, 2}, {2, 4}, {2, 6}, {8, 6}});
    CHECK(s.pareto_minimal == PairList{{2, 2}});
}

TEST_CASE("cube root of two and OandD renormalizations")
{
    CHECK(pairs(search_renorms(map_cbrt2(), 8, 8)) == PairList{{2, 2}, {2, 4}});
    CHECK(pairs(search_renorms(map_oandd(), 8, 8)) == PairList{{2, 2}});
}

TEST_CASE("a primary cycle yields a renormalization on [f^(n-1)(0), f^(n-1)(1)]")
{
    LorenzMap f = map52();
    RenormCheck chk = validate_renorm(f, 5, 5);
    REQUIRE(chk.valid);
    CHECK(chk.g.u == iterate(f, f.zero(), 4).value);
    CHECK(chk.g.v == iterate(f, f.one(), 4).value);
}

TEST_CASE("renormalization from the ex5_2 cycle")
{
    LorenzMap f = map52();
    PeriodicOrbitReport rep = periodic_orbits(f, 5);
    auto fives = rep.with_period(5);
    REQUIRE(fives.size() == 1);
    std::vector<FieldElement> E;
    for (const auto& p : fives[0]->points) {
        E.push_back(p.value);
    }
    InvariantSetRenorm res = renorm_from_invariant_set(f, E, 6);
    CHECK(res.e_minus == fives[0]->z(2));
    CHECK(res.e_plus == fives[0]->z(3));
    REQUIRE(res.l.has_value());
    REQUIRE(res.r.has_value());
    CHECK(*res.l == 5);
    CHECK(*res.r == 5);
    CHECK(res.periodic_ok);
    REQUIRE(res.g.has_value());
    CHECK(res.g->valid);
    CHECK(res.preimage_closed);
}

TEST_CASE("cube root of two: the orbit of f(0) is not completely invariant")
{
    LorenzMap f = map_cbrt2();
    FieldElement z0 = f.f0();
    std::vector<FieldElement> E{z0};
    FieldElement y = f.apply(z0);
    while (!(y == z0)) {
        E.push_back(y);
        y = f.apply(y);
    }
    InvariantSetRenorm res = renorm_from_invariant_set(f, E, 4);
    CHECK_FALSE(res.preimage_closed);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == f.c_plus());
    CHECK(res.witness_depth == 2);
}

TEST_CASE("invariant set without a point right of c")
{
    LorenzMap f = doubling();
    std::vector<FieldElement> E{f.context().from_rational(Rational(1, 3))};
    CHECK_THROWS_AS(renorm_from_invariant_set(f, E, 3), LorenzError);
    try {
        renorm_from_invariant_set(f, E, 3);
    } catch (const LorenzError& e) {
        CHECK(e.kind() == ErrorKind::NoPointRightOfC);
    }
}

TEST_CASE("ex4: (4,4) endpoints enter the interval, (8,8) endpoints do not")
{
    LorenzMap f = map4();
    RenormCheck g4 = validate_renorm(f, 4, 4);
    RenormCheck g8 = validate_renorm(f, 8, 8);
    REQUIRE(g4.valid);
    REQUIRE(g8.valid);
    CHECK(invariant_set_analysis(f, g4.g, 200).lem_inv == "invariant");
    CHECK(invariant_set_analysis(f, g8.g, 200).lem_inv == "not_invariant");
}

TEST_CASE("51from4 matching index")
{
    LorenzMap f = map51();
    Matching m = matching(f, 40);
    REQUIRE(m.eta.has_value());
    CHECK(*m.eta == 11);
}
