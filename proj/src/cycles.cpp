#include "lorenz/cycles.hpp"

#include "lorenz/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lorenz {

namespace {

struct ValueLess {
    bool operator()(const FieldElement& a, const FieldElement& b) const { return a < b; }
};

// True when x has exact plain period n and its orbit avoids c.
bool has_plain_period(const LorenzMap& f, const FieldElement& x, int n)
{
    try {
        FieldElement y = x;
        for (int i = 1; i <= n; ++i) {
            if (y == f.c()) {
                return false;
            }
            y = f.apply(y);
            if (y == x) {
                return i == n;
            }
        }
    } catch (const LorenzError& e) {
        if (e.kind() != ErrorKind::PrecisionExhausted) {
            throw;
        }
    }
    return false;
}

PeriodicOrbit make_orbit(const LorenzMap& f, std::vector<SidedPoint> pts, int period)
{
    PeriodicOrbit o;
    std::sort(pts.begin(), pts.end(), SidedLess{});
    o.period = period;
    const SidedPoint cp = f.c_plus();
    for (const auto& p : pts) {
        o.right_count += p >= cp ? 1 : 0;
        o.contains_sided = o.contains_sided || p.side != Side::Plain;
    }
    o.points = std::move(pts);
    return o;
}

} // namespace

std::vector<const PeriodicOrbit*> PeriodicOrbitReport::with_period(int n) const
{
    std::vector<const PeriodicOrbit*> out;
    for (const auto& o : orbits) {
        if (o.period == n) {
            out.push_back(&o);
        }
    }
    return out;
}

std::vector<FieldElement> plain_periodic_points(const LorenzMap& f, int n)
{
    const FieldContext& k = f.context();
    std::set<FieldElement, ValueLess> found;
    for (const Lap& lap : laps(f, n)) {
        FieldElement denom = k.one() - lap.slope;
        if (denom.sign() == 0) {
            if (lap.intercept.sign() == 0) {
                throw LorenzError(ErrorKind::SlopeOneLap, "f^" + std::to_string(n) + " is the identity on a lap");
            }
            continue;
        }
        FieldElement x = lap.intercept / denom;
        if (x < lap.lo || x > lap.hi || found.count(x) != 0) {
            continue;
        }
        if (has_plain_period(f, x, n)) {
            found.insert(x);
        }
    }
    return {found.begin(), found.end()};
}

PeriodicOrbitReport periodic_orbits(const LorenzMap& f, int n_max, int horizon)
{
    PeriodicOrbitReport rep;
    for (int n = 1; n <= n_max; ++n) {
        std::set<FieldElement, ValueLess> claimed;
        for (const FieldElement& x : plain_periodic_points(f, n)) {
            if (claimed.count(x) != 0) {
                continue;
            }
            std::vector<SidedPoint> pts;
            FieldElement y = x;
            for (int i = 0; i < n; ++i) {
                claimed.insert(y);
                pts.push_back(SidedPoint::plain(y));
                y = f.apply(y);
            }
            rep.orbits.push_back(make_orbit(f, std::move(pts), n));
        }
    }
    for (const auto& start : {f.c_minus(), f.c_plus()}) {
        Orbit o = orbit(f, start, horizon);
        if (!o.recurrent() || *o.preperiod != 0) {
            continue;
        }
        (start.side == Side::Minus ? rep.c_minus_period : rep.c_plus_period) = *o.period;
        if (*o.period > n_max) {
            continue;
        }
        bool duplicate = false;
        for (const auto& existing : rep.orbits) {
            duplicate = duplicate || (existing.contains_sided &&
                                      std::any_of(existing.points.begin(), existing.points.end(),
                                                  [&](const SidedPoint& p) { return p == start; }));
        }
        if (!duplicate) {
            rep.orbits.push_back(make_orbit(f, o.points, *o.period));
        }
    }
    std::stable_sort(rep.orbits.begin(), rep.orbits.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
        if (a.period != b.period) {
            return a.period < b.period;
        }
        return a.points.front() < b.points.front();
    });
    for (auto& o : rep.orbits) {
        o.nk = detect_nk_cycle(f, o);
        if (!rep.kappa || o.period < *rep.kappa) {
            rep.kappa = o.period;
        }
        if (!o.contains_sided && (!rep.plain_kappa || o.period < *rep.plain_kappa)) {
            rep.plain_kappa = o.period;
        }
    }
    return rep;
}

std::optional<NkCycle> detect_nk_cycle(const LorenzMap& f, const PeriodicOrbit& orbit)
{
    if (orbit.contains_sided) {
        return std::nullopt;
    }
    const int n = orbit.period;
    const int k = orbit.right_count;
    if (k < 1 || k >= n || std::gcd(n, k) != 1 || static_cast<int>(orbit.points.size()) != n) {
        return std::nullopt;
    }
    if (!(orbit.z(n - k - 1) < f.c() && f.c() < orbit.z(n - k))) {
        return std::nullopt;
    }
    for (int j = 0; j < n; ++j) {
        if (!(f.apply(orbit.z(j)) == orbit.z((j + k) % n))) {
            return std::nullopt;
        }
    }
    NkCycle out{n, k, false, false};
    int lo = compare(orbit.z(k - 1), f.f0());
    int hi = compare(f.f1(), orbit.z(k));
    out.primary = lo <= 0 && hi <= 0;
    out.strict = out.primary && lo < 0 && hi < 0;
    return out;
}

FixedPointLemma fixed_point_lemma_check(const LorenzMap& f, int bound)
{
    const SidedPoint lo = eval_sided(f, f.zero());
    const SidedPoint hi = eval_sided(f, f.one());
    PreimageTree tree = preimages(f, {f.c_minus(), f.c_plus()}, bound);
    std::optional<int> m;
    SidedPoint witness;
    for (const auto& node : tree.nodes) {
        if (lo <= node.point && node.point <= hi && (!m || node.depth < *m)) {
            m = node.depth;
            witness = node.point;
        }
    }
    if (!m) {
        throw LorenzError(ErrorKind::OutOfBound, "no preimage of c within depth " + std::to_string(bound) +
                                                     " lies in [f(0), f(1)]");
    }
    FixedPointLemma out;
    out.m = *m;
    out.witness = witness;
    const FieldContext& k = f.context();
    for (const Lap& lap : laps(f, *m + 2)) {
        FieldElement denom = k.one() - lap.slope;
        if (denom.sign() == 0) {
            continue;
        }
        FieldElement x = lap.intercept / denom;
        if (lap.lo <= x && x <= lap.hi) {
            out.found_fixed_point = true;
            out.fixed_point = x;
            break;
        }
    }
    return out;
}

} // namespace lorenz
