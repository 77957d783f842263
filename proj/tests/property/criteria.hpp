#pragma once

// Property suites shared by the property tests and the acceptance binary.

#include "generators.hpp"

#include "lorenz/cycles.hpp"
#include "lorenz/kernels.hpp"
#include "lorenz/kneading.hpp"
#include "lorenz/markov.hpp"
#include "lorenz/renorm.hpp"
#include "lorenz/sidedspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace suites {

using namespace lorenz;

struct SuiteResult {
    bool passed = true;
    int checked = 0;
    std::string detail;

    void fail(const std::string& what)
    {
        if (passed) {
            detail = what;
        }
        passed = false;
    }
};

// (a) Kneading invariants of ModOne maps with recurrent critical orbits are admissible.
inline SuiteResult admissibility_suite(std::uint64_t seed, int maps, int horizon = 200)
{
    SuiteResult res;
    gen::Rng rng(seed);
    int attempts = 0;
    while (res.checked < maps && attempts < 20 * maps) {
        ++attempts;
        LorenzMap f = gen::mod_one_pisot(rng);
        KneadingInvariant k = kneading_invariant(f, horizon);
        if (k.plus.truncated() || k.minus.truncated()) {
            continue;
        }
        ++res.checked;
        AdmissibilityResult a = admissibility_check(k.plus, k.minus);
        if (a.verdict != Admissibility::Admissible) {
            res.fail(f.describe() + ": " + to_string(a.verdict) + " k+=" + k.plus.to_string() +
                     " k-=" + k.minus.to_string());
        }
    }
    if (res.checked < maps) {
        res.fail("only " + std::to_string(res.checked) + " recurrent maps drawn");
    }
    return res;
}

// (b) d(f_hat x, f_hat y) >= d(x, y) for pairs with decided d < 1.
inline SuiteResult expansion_suite(std::uint64_t seed, int pairs, int depth = 60)
{
    SuiteResult res;
    gen::Rng rng(seed);
    FieldContext q = FieldContext::rationals();
    int attempts = 0;
    while (res.checked < pairs && attempts < 50 * pairs) {
        ++attempts;
        LorenzMap f = attempts % 3 == 0 ? gen::mod_one_pisot(rng) : gen::rational_map(rng, q);
        SidedPoint x = gen::plain_point(rng, f);
        Rational step = rng.dyadic(12) / 64;
        SidedPoint y = SidedPoint::plain(x.value + f.context().from_rational(step));
        if (y.value >= f.context().one() || y.value == f.c()) {
            continue;
        }
        MetricValue d = metric_d(f, x, y, depth);
        if (!d.decided || d.value >= f.context().one()) {
            continue;
        }
        SidedPoint fx, fy;
        try {
            fx = eval_sided(f, x);
            fy = eval_sided(f, y);
        } catch (const LorenzError&) {
            continue;
        }
        MetricValue e = metric_d(f, fx, fy, depth);
        if (!e.decided) {
            continue;
        }
        ++res.checked;
        if (e.value < d.value) {
            res.fail("contraction at " + x.to_string() + ", " + y.to_string() + " on " + f.describe());
        }
    }
    if (res.checked < pairs) {
        res.fail("only " + std::to_string(res.checked) + " decided pairs");
    }
    return res;
}

// (c) Lap enumeration agrees with the grid-scan oracle, float mode, n <= n_max.
inline SuiteResult completeness_suite(std::uint64_t seed, int maps, int n_max = 6, double tol = 1e-8,
                                      unsigned float_bits = 128)
{
    SuiteResult res;
    gen::Rng rng(seed);
    FieldContext q = FieldContext::rationals(float_bits);
    for (int i = 0; i < maps; ++i) {
        LorenzMap f = gen::rational_map(rng, q);
        FloatMap fm = to_float_map(f);
        ++res.checked;
        for (int n = 1; n <= n_max; ++n) {
            std::vector<double> laps_pts;
            try {
                for (const auto& x : plain_periodic_points(f, n)) {
                    laps_pts.push_back(x.to_double());
                }
            } catch (const LorenzError& e) {
                res.fail(f.describe() + " n=" + std::to_string(n) + ": " + e.what());
                continue;
            }
            std::vector<double> grid_pts = grid_periodic_points(fm, n);
            std::sort(laps_pts.begin(), laps_pts.end());
            std::sort(grid_pts.begin(), grid_pts.end());
            bool same = laps_pts.size() == grid_pts.size();
            for (std::size_t j = 0; same && j < laps_pts.size(); ++j) {
                same = std::fabs(laps_pts[j] - grid_pts[j]) <= tol;
            }
            if (!same) {
                std::ostringstream os;
                os << f.describe() << " n=" << n << ": laps " << laps_pts.size() << " points, grid "
                   << grid_pts.size();
                res.fail(os.str());
            }
        }
    }
    return res;
}

// (d) The fixed-point lemma finds m and a period-(m+2) point.
inline SuiteResult fixed_point_lemma_suite(std::uint64_t seed, int maps, int bound = 12)
{
    SuiteResult res;
    gen::Rng rng(seed);
    FieldContext q = FieldContext::rationals();
    for (int i = 0; i < maps; ++i) {
        LorenzMap f = gen::rational_map(rng, q);
        ++res.checked;
        try {
            FixedPointLemma lem = fixed_point_lemma_check(f, bound);
            if (!lem.found_fixed_point) {
                res.fail(f.describe() + ": no fixed point of f^" + std::to_string(lem.m + 2));
            }
        } catch (const LorenzError& e) {
            res.fail(f.describe() + ": " + e.what());
        }
    }
    return res;
}

// Period of the first primary n(k)-cycle with n <= n_max, if any.
inline std::optional<int> primary_cycle_period(const LorenzMap& f, int n_max = 6)
{
    PeriodicOrbitReport rep = periodic_orbits(f, n_max);
    for (const auto& o : rep.orbits) {
        if (o.nk && o.nk->primary) {
            return o.nk->n;
        }
    }
    return std::nullopt;
}

// (e) Every valid (l, r) with max(l, r) >= n has n | l and n | r.
inline SuiteResult divisibility_suite(const std::vector<std::pair<std::string, LorenzMap>>& maps, int bound = 10)
{
    SuiteResult res;
    for (const auto& [name, f] : maps) {
        std::optional<int> n = primary_cycle_period(f);
        if (!n) {
            continue;
        }
        ++res.checked;
        RenormSearch s = search_renorms(f, bound, bound);
        for (const auto& g : s.valid) {
            if (std::max(g.l, g.r) >= *n && (g.l % *n != 0 || g.r % *n != 0)) {
                res.fail(name + ": (" + std::to_string(g.l) + "," + std::to_string(g.r) + ") with n=" +
                         std::to_string(*n));
            }
        }
    }
    if (res.checked == 0) {
        res.fail("no cycle maps");
    }
    return res;
}

// (f) Spectral radius of the Markov matrix equals beta for ModOne maps with a Markov system.
inline SuiteResult spectral_radius_suite(const std::vector<std::pair<std::string, LorenzMap>>& maps,
                                         int bound = 400, double tol = 1e-8)
{
    SuiteResult res;
    std::string skipped;
    for (const auto& [name, f] : maps) {
        if (f.family() != Family::ModOne) {
            continue;
        }
        MarkovSystem m;
        try {
            m = build_markov(f, bound);
        } catch (const LorenzError& e) {
            if (e.kind() != ErrorKind::NotEventuallyPeriodic) {
                res.fail(name + ": " + e.what());
            }
            skipped += (skipped.empty() ? "" : ",") + name;
            continue;
        }
        ++res.checked;
        double rho = spectral_radius(m.matrix);
        double beta = f.param1().to_double();
        if (std::fabs(rho - beta) > tol) {
            std::ostringstream os;
            os.precision(15);
            os << name << ": rho " << rho << " vs beta " << beta;
            res.fail(os.str());
        }
    }
    if (res.checked == 0) {
        res.fail("no ModOne map with a Markov system");
    }
    if (res.passed && !skipped.empty()) {
        res.detail = "no Markov system: " + skipped;
    }
    return res;
}

} // namespace suites
