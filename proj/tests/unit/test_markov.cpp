#include <doctest.h>

#include "lorenz/error.hpp"
#include "lorenz/markov.hpp"
#include "maps.hpp"

#include <cmath>

using namespace lorenz;
using namespace testmaps;

TEST_CASE("doubling map is the full shift")
{
    MarkovSystem m = build_markov(doubling(), 50);
    REQUIRE(m.size() == 2);
    CHECK(m.matrix == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
    DynamicsVerdict v = dynamics_verdict(m);
    CHECK(v.primitive);
    CHECK(v.verdict == "mixing");
    CHECK(v.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("51from4 Markov graph is 1->2->3->4->{1,2}")
{
    LorenzMap f = map51();
    MarkovSystem m = build_markov(f, 50);
    REQUIRE(m.size() == 4);
    CHECK(m.breakpoints[1] == f.f0());
    CHECK(m.breakpoints[2] == f.f1());
    CHECK(m.breakpoints[3] == f.c());
    CHECK(m.matrix == std::vector<std::vector<int>>{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}});
    DynamicsVerdict v = dynamics_verdict(m);
    CHECK(v.irreducible);
    CHECK(v.primitive);
    CHECK(v.verdict == "mixing");
    CHECK(v.spectral_radius == doctest::Approx(f.param1().to_double()).epsilon(1e-10));
}

TEST_CASE("OandD Markov system")
{
    LorenzMap f = map_oandd();
    MarkovSystem m = build_markov(f, 50);
    REQUIRE(m.size() == 4);
    CHECK(m.breakpoints[1] == f.f0());
    CHECK(m.breakpoints[2] == f.c());
    CHECK(m.breakpoints[3] == f.f1());
    CHECK(m.matrix == std::vector<std::vector<int>>{{0, 1, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 1, 0}});
    DynamicsVerdict v = dynamics_verdict(m);
    // Irreducible with period 2: [f(0), f(1)] is invariant under f^2 only.
    CHECK(v.irreducible);
    CHECK(v.period == 2);
    CHECK(v.verdict == "transitive_not_mixing");
    CHECK_FALSE(forward_invariant(m, {1, 2}));
    CHECK(forward_invariant(m, {0, 1, 2, 3}));
}

TEST_CASE("reducible matrix gives a verified invariant witness")
{
    MarkovSystem m;
    FieldContext k = FieldContext::rationals();
    for (int i = 0; i <= 3; ++i) {
        m.breakpoints.push_back(k.from_rational(Rational(i, 3)));
    }
    m.matrix = {{1, 1, 0}, {1, 1, 0}, {1, 1, 1}};
    m.images = {{m.breakpoints[0], m.breakpoints[2]}, {m.breakpoints[0], m.breakpoints[2]},
                {m.breakpoints[0], m.breakpoints[3]}};
    DynamicsVerdict v = dynamics_verdict(m);
    CHECK_FALSE(v.irreducible);
    CHECK(v.verdict == "not_transitive");
    CHECK(v.witness == std::vector<int>{0, 1});
    CHECK(v.witness_verified);
    CHECK(v.spectral_radius == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("ModOne spectral radius equals beta")
{
    for (const LorenzMap& f : {map51(), map3(), map4()}) {
        MarkovSystem m = build_markov(f, 200);
        CHECK(std::abs(dynamics_verdict(m).spectral_radius - f.param1().to_double()) < 1e-8);
    }
}
