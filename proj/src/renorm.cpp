#include "lorenz/renorm.hpp"

#include "lorenz/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lorenz {

namespace {

struct ValueLess {
    bool operator()(const FieldElement& a, const FieldElement& b) const { return a < b; }
};

// Product of branch slopes along n steps from an interior point x.
FieldElement slope_along(const LorenzMap& f, FieldElement x, int n)
{
    FieldElement s = f.context().one();
    for (int i = 0; i < n; ++i) {
        bool left = x < f.c();
        s *= left ? f.left_slope() : f.right_slope();
        x = left ? f.left(x) : f.right(x);
    }
    return s;
}

// Whether an n-step one-sided iteration from x passes through c after the start.
bool limit_hits_c(const LorenzMap& f, FieldElement x, int n, Side side)
{
    for (int i = 0; i < n; ++i) {
        x = f.limit(x, side);
        if (i + 1 < n && x == f.c()) {
            return true;
        }
    }
    return false;
}

EndpointOrbit endpoint_orbit(const LorenzMap& f, const SidedPoint& start, const FieldElement& u,
                             const FieldElement& v, int depth)
{
    EndpointOrbit out;
    Orbit o = orbit(f, start, depth);
    for (std::size_t i = 1; i < o.points.size(); ++i) {
        const FieldElement& x = o.points[i].value;
        if (u < x && x < v) {
            out.meets = true;
            out.first_hit = static_cast<int>(i);
            return out;
        }
    }
    if (o.recurrent()) {
        out.meets = false;
    }
    return out;
}

} // namespace

FieldElement limit_iterate(const LorenzMap& f, FieldElement x, int n, Side side)
{
    for (int i = 0; i < n; ++i) {
        x = f.limit(x, side);
    }
    return x;
}

RenormCheck validate_renorm(const LorenzMap& f, int l, int r)
{
    if (l < 1 || r < 1) {
        throw LorenzError(ErrorKind::OutOfBound, "renormalization periods must be positive");
    }
    RenormCheck out;
    Renormalization& g = out.g;
    g.l = l;
    g.r = r;
    g.u_hat = iterate(f, f.c_plus(), r);
    g.v_hat = iterate(f, f.c_minus(), l);
    g.u = g.u_hat.value;
    g.v = g.v_hat.value;
    const FieldContext& k = f.context();
    if (!(g.u < f.c() && f.c() < g.v) || (g.u.sign() == 0 && g.v == k.one())) {
        out.reason = "interval-degenerate";
        return out;
    }
    if (hitting_time_N(f, g.u, f.c(), l - 1) || hitting_time_N(f, f.c(), g.v, r - 1)) {
        out.reason = "continuity-broken";
        return out;
    }
    g.g_u = limit_iterate(f, g.u, l, Side::Plus);
    g.g_v = limit_iterate(f, g.v, r, Side::Minus);
    if (g.u_hat.side != Side::Plain) {
        g.conventions.emplace_back("u=" + g.u_hat.to_string());
    }
    if (g.v_hat.side != Side::Plain) {
        g.conventions.emplace_back("v=" + g.v_hat.to_string());
    }
    if (limit_hits_c(f, g.u, l, Side::Plus)) {
        g.conventions.emplace_back("g(u)=f^l(u_+)");
    }
    if (limit_hits_c(f, g.v, r, Side::Minus)) {
        g.conventions.emplace_back("g(v)=f^r(v_-)");
    }
    if (g.g_u < g.u || g.g_v > g.v) {
        out.reason = "image-escape";
        return out;
    }
    if (!(g.g_u < g.g_v)) {
        out.reason = "order-violated";
        return out;
    }
    FieldElement two = k.from_rational(2);
    FieldElement sl = slope_along(f, (g.u + f.c()) / two, l);
    FieldElement sr = slope_along(f, (f.c() + g.v) / two, r);
    g.expanding = sl > k.one() && sr > k.one();
    out.valid = true;
    return out;
}

RenormSearch search_renorms(const LorenzMap& f, int l_max, int r_max)
{
    RenormSearch out;
    for (int l = 2; l <= l_max; ++l) {
        for (int r = 2; r <= r_max; ++r) {
            RenormCheck chk = validate_renorm(f, l, r);
            if (chk.valid) {
                out.valid.push_back(std::move(chk.g));
            }
        }
    }
    for (const auto& a : out.valid) {
        bool dominated = std::any_of(out.valid.begin(), out.valid.end(), [&](const Renormalization& b) {
            return (b.l != a.l || b.r != a.r) && b.l <= a.l && b.r <= a.r;
        });
        if (!dominated) {
            out.pareto_minimal.emplace_back(a.l, a.r);
        }
    }
    if (out.pareto_minimal.size() == 1) {
        out.unique_minimum = out.pareto_minimal.front();
    }
    return out;
}

InvariantSetRenorm renorm_from_invariant_set(const LorenzMap& f, const std::vector<FieldElement>& E, int depth)
{
    std::optional<FieldElement> lo, hi;
    for (const auto& x : E) {
        if (x < f.c() && (!lo || *lo < x)) {
            lo = x;
        }
        if (x > f.c() && (!hi || x < *hi)) {
            hi = x;
        }
    }
    if (!lo) {
        throw LorenzError(ErrorKind::NoPointLeftOfC, "invariant set has no point left of c");
    }
    if (!hi) {
        throw LorenzError(ErrorKind::NoPointRightOfC, "invariant set has no point right of c");
    }
    InvariantSetRenorm out;
    out.e_minus = *lo;
    out.e_plus = *hi;
    out.l = hitting_time_N(f, out.e_minus, f.c());
    out.r = hitting_time_N(f, f.c(), out.e_plus);
    if (out.l && out.r && *out.l >= 1 && *out.r >= 1) {
        out.periodic_ok = limit_iterate(f, out.e_minus, *out.l, Side::Plus) == out.e_minus &&
                          limit_iterate(f, out.e_plus, *out.r, Side::Minus) == out.e_plus;
        out.g = validate_renorm(f, *out.l, *out.r);
    }

    std::set<FieldElement, ValueLess> allowed(E.begin(), E.end());
    allowed.insert(f.context().zero());
    allowed.insert(f.context().one());
    std::vector<SidedPoint> roots;
    roots.reserve(E.size());
    for (const auto& x : E) {
        roots.push_back(SidedPoint::plain(x));
    }
    std::deque<std::pair<SidedPoint, int>> frontier;
    for (const auto& p : roots) {
        frontier.emplace_back(p, 0);
    }
    std::set<SidedPoint, SidedLess> seen(roots.begin(), roots.end());
    while (!frontier.empty()) {
        auto [p, d] = frontier.front();
        frontier.pop_front();
        if (d >= depth) {
            continue;
        }
        for (auto& y : preimages_one(f, p)) {
            if (allowed.count(y.value) == 0) {
                out.preimage_closed = false;
                out.witness = y;
                out.witness_depth = d + 1;
                return out;
            }
            if (seen.insert(y).second) {
                frontier.emplace_back(y, d + 1);
            }
        }
    }
    return out;
}

InvariantAnalysis invariant_set_analysis(const LorenzMap& f, const Renormalization& g, int depth,
                                         const std::vector<FieldElement>& samples,
                                         const std::vector<FieldElement>& periodic_orbit)
{
    InvariantAnalysis out;
    out.u_orbit = endpoint_orbit(f, SidedPoint::plus(g.u), g.u, g.v, depth);
    out.v_orbit = endpoint_orbit(f, SidedPoint::minus(g.v), g.u, g.v, depth);
    if (out.u_orbit.meets == true && out.v_orbit.meets == true) {
        out.lem_inv = "invariant";
    } else if (out.u_orbit.meets == false || out.v_orbit.meets == false) {
        out.lem_inv = "not_invariant";
    } else {
        out.lem_inv = "undecided";
    }

    for (const auto& x0 : samples) {
        SampleClass cls = SampleClass::Unknown;
        std::set<FieldElement, ValueLess> seen;
        FieldElement x = x0;
        try {
            for (int i = 0; i <= depth; ++i) {
                if (g.u < x && x < g.v) {
                    cls = SampleClass::InF;
                    break;
                }
                if (!seen.insert(x).second) {
                    cls = SampleClass::InJ;
                    break;
                }
                x = f.apply(x);
            }
        } catch (const LorenzError& e) {
            if (e.kind() != ErrorKind::PrecisionExhausted) {
                throw;
            }
        }
        out.samples.push_back(cls);
        out.in_f += cls == SampleClass::InF ? 1 : 0;
        out.in_j += cls == SampleClass::InJ ? 1 : 0;
        out.unknown += cls == SampleClass::Unknown ? 1 : 0;
    }

    if (!periodic_orbit.empty()) {
        std::set<FieldElement, ValueLess> allowed(periodic_orbit.begin(), periodic_orbit.end());
        allowed.insert(f.context().zero());
        allowed.insert(f.context().one());
        out.d_o_closed = true;
        for (const auto& z : periodic_orbit) {
            for (auto& y : preimages_one(f, SidedPoint::plain(z))) {
                if (allowed.count(y.value) == 0 && !out.d_o_witness) {
                    out.d_o_closed = false;
                    out.d_o_witness = y;
                }
            }
        }
    }
    return out;
}

Matching matching(const LorenzMap& f, int eta_max)
{
    Matching out;
    Orbit a = orbit(f, f.c_minus(), eta_max + 1);
    Orbit b = orbit(f, f.c_plus(), eta_max + 1);
    auto idx_ok = [&](const Orbit& o, int i) { return o.recurrent() || i < static_cast<int>(o.points.size()); };
    for (int i = 1; i <= eta_max; ++i) {
        if (!idx_ok(a, i) || !idx_ok(b, i)) {
            break;
        }
        if (a.at(i).value == b.at(i).value) {
            out.eta = i;
            out.sided_equal = a.at(i) == b.at(i);
            break;
        }
    }
    if (!out.eta) {
        return out;
    }
    out.persists = true;
    for (int j = *out.eta + 1; j <= eta_max; ++j) {
        if (!idx_ok(a, j) || !idx_ok(b, j)) {
            break;
        }
        if (!(a.at(j).value == b.at(j).value)) {
            out.persists = false;
            out.separates_at = j;
            break;
        }
    }
    return out;
}

} // namespace lorenz
