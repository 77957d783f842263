#include "lorenz/lorenzmap.hpp"

#include "lorenz/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace lorenz {

struct LorenzMap::Cache {
    std::once_flag zero_once;
    std::once_flag one_once;
    bool zero_doubled = false;
    bool one_doubled = false;
};

namespace {

constexpr int kLookahead = 256;

// Whether the plain forward orbit of y hits c within the lookahead.
bool orbit_hits_c(const LorenzMap& f, FieldElement y)
{
    try {
        std::map<FieldElement, int, decltype([](const FieldElement& a, const FieldElement& b) { return a < b; })>
            seen;
        for (int i = 0; i < kLookahead; ++i) {
            if (y == f.c()) {
                return true;
            }
            if (!seen.emplace(y, i).second) {
                return false;
            }
            y = f.apply(y);
        }
    } catch (const LorenzError& e) {
        if (e.kind() != ErrorKind::PrecisionExhausted) {
            throw;
        }
    }
    return false;
}

} // namespace

LorenzMap LorenzMap::mod_one(const FieldElement& beta, const FieldElement& alpha)
{
    if (!(beta.context() == alpha.context())) {
        throw LorenzError(ErrorKind::FieldMismatch, "beta and alpha live in different fields");
    }
    const FieldContext& k = beta.context();
    if (beta <= k.one()) {
        throw LorenzError(ErrorKind::NotExpanding, "beta = " + std::to_string(beta.to_double()) + " <= 1");
    }
    LorenzMap f;
    f.family_ = Family::ModOne;
    f.p1_ = beta;
    f.p2_ = alpha;
    f.sl_ = beta;
    f.tl_ = alpha;
    f.sr_ = beta;
    f.tr_ = alpha - k.one();
    f.c_ = (k.one() - alpha) / beta;
    if (f.c_.sign() <= 0 || f.c_ >= k.one()) {
        throw LorenzError(ErrorKind::CriticalOutOfRange, "c = (1 - alpha)/beta outside (0,1)");
    }
    if (f.f0().sign() < 0 || f.f0() >= f.f1() || f.f1() > k.one()) {
        throw LorenzError(ErrorKind::OrderViolation, "need 0 <= f(0) < f(1) <= 1");
    }
    f.cache_ = std::make_shared<Cache>();
    return f;
}

LorenzMap LorenzMap::two_slope(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                               bool require_distinct_slopes)
{
    if (!(a.context() == b.context()) || !(a.context() == c.context())) {
        throw LorenzError(ErrorKind::FieldMismatch, "a, b, c live in different fields");
    }
    const FieldContext& k = a.context();
    if (a.sign() <= 0 || b.sign() <= 0) {
        throw LorenzError(ErrorKind::OrderViolation, "slopes must be positive");
    }
    if (c.sign() <= 0 || c >= k.one()) {
        throw LorenzError(ErrorKind::CriticalOutOfRange, "c outside (0,1)");
    }
    if (require_distinct_slopes && a == b) {
        throw LorenzError(ErrorKind::SlopesNotDistinct, "class L requires a != b");
    }
    LorenzMap f;
    f.family_ = Family::TwoSlope;
    f.p1_ = a;
    f.p2_ = b;
    f.sl_ = a;
    f.tl_ = k.one() - a * c;
    f.sr_ = b;
    f.tr_ = -(b * c);
    f.c_ = c;
    if (f.f0().sign() < 0 || f.f0() >= f.f1() || f.f1() > k.one()) {
        throw LorenzError(ErrorKind::OrderViolation, "need 0 <= f(0) < f(1) <= 1");
    }
    f.cache_ = std::make_shared<Cache>();
    return f;
}

FieldElement LorenzMap::limit(const FieldElement& x, Side from) const
{
    int s = compare(x, c_);
    if (s < 0 || (s == 0 && from == Side::Minus)) {
        return left(x);
    }
    if (s > 0 || (s == 0 && from == Side::Plus)) {
        return right(x);
    }
    throw LorenzError(ErrorKind::AmbiguousCritical, "limit at c needs a side");
}

FieldElement LorenzMap::apply(const FieldElement& x) const
{
    int s = compare(x, c_);
    if (s == 0) {
        throw LorenzError(ErrorKind::AmbiguousCritical, "f(c) is undefined");
    }
    return s < 0 ? left(x) : right(x);
}

bool LorenzMap::zero_image_doubled() const
{
    std::call_once(cache_->zero_once, [this] { cache_->zero_doubled = orbit_hits_c(*this, f0()); });
    return cache_->zero_doubled;
}

bool LorenzMap::one_image_doubled() const
{
    std::call_once(cache_->one_once, [this] { cache_->one_doubled = orbit_hits_c(*this, f1()); });
    return cache_->one_doubled;
}

std::string LorenzMap::describe() const
{
    std::ostringstream out;
    out.precision(12);
    if (family_ == Family::ModOne) {
        out << "mod_one(beta=" << p1_.to_double() << ", alpha=" << p2_.to_double() << ")";
    } else {
        out << "two_slope(a=" << p1_.to_double() << ", b=" << p2_.to_double() << ", c=" << c_.to_double() << ")";
    }
    return out.str();
}

SidedPoint eval_sided(const LorenzMap& f, const SidedPoint& p)
{
    const FieldContext& k = f.context();
    int vs = compare(p.value, f.c());
    if (p.side != Side::Plain) {
        if (vs == 0) {
            return SidedPoint::plain(p.side == Side::Minus ? k.one() : k.zero());
        }
        return {vs < 0 ? f.left(p.value) : f.right(p.value), p.side};
    }
    if (vs == 0) {
        throw LorenzError(ErrorKind::AmbiguousCritical, "plain c has no image; use c- or c+");
    }
    if (p.value.sign() == 0) {
        return {f.f0(), f.zero_image_doubled() ? Side::Plus : Side::Plain};
    }
    if (p.value == k.one()) {
        return {f.f1(), f.one_image_doubled() ? Side::Minus : Side::Plain};
    }
    FieldElement y = vs < 0 ? f.left(p.value) : f.right(p.value);
    if (y == f.c()) {
        throw LorenzError(ErrorKind::RequiresSide, "plain point maps to c; split it into sided points");
    }
    return SidedPoint::plain(std::move(y));
}

SidedPoint iterate(const LorenzMap& f, SidedPoint p, int n)
{
    for (int i = 0; i < n; ++i) {
        p = eval_sided(f, p);
    }
    return p;
}

const SidedPoint& Orbit::at(int i) const
{
    if (i < static_cast<int>(points.size())) {
        return points[static_cast<std::size_t>(i)];
    }
    if (!period) {
        throw LorenzError(ErrorKind::OutOfBound, "orbit index beyond the computed prefix");
    }
    int j = *preperiod + (i - *preperiod) % *period;
    return points[static_cast<std::size_t>(j)];
}

Orbit orbit(const LorenzMap& f, const SidedPoint& p, int max_steps)
{
    Orbit o;
    o.points.push_back(p);
    std::map<SidedPoint, int, SidedLess> seen;
    try {
        seen.emplace(p, 0);
        for (int step = 1; step <= max_steps; ++step) {
            SidedPoint q = eval_sided(f, o.points.back());
            auto [it, inserted] = seen.emplace(q, step);
            if (!inserted) {
                o.preperiod = it->second;
                o.period = step - it->second;
                break;
            }
            o.points.push_back(std::move(q));
        }
    } catch (const LorenzError& e) {
        if (e.kind() != ErrorKind::PrecisionExhausted) {
            throw;
        }
        o.truncated = true;
    }
    return o;
}

std::vector<Lap> laps(const LorenzMap& f, int n)
{
    const FieldContext& k = f.context();
    std::vector<Lap> pieces{
        {k.zero(), f.c(), f.left_slope(), f.left_intercept(), "0"},
        {f.c(), k.one(), f.right_slope(), f.right_intercept(), "1"},
    };
    for (int step = 1; step < n; ++step) {
        std::vector<Lap> next;
        next.reserve(pieces.size() * 2);
        for (const Lap& lap : pieces) {
            FieldElement ylo = lap.slope * lap.lo + lap.intercept;
            FieldElement yhi = lap.slope * lap.hi + lap.intercept;
            auto compose = [&](const FieldElement& lo, const FieldElement& hi, bool right_branch) {
                const FieldElement& s = right_branch ? f.right_slope() : f.left_slope();
                const FieldElement& t = right_branch ? f.right_intercept() : f.left_intercept();
                next.push_back({lo, hi, s * lap.slope, s * lap.intercept + t, lap.word + (right_branch ? "1" : "0")});
            };
            if (ylo < f.c() && f.c() < yhi) {
                FieldElement split = (f.c() - lap.intercept) / lap.slope;
                compose(lap.lo, split, false);
                compose(split, lap.hi, true);
            } else {
                compose(lap.lo, lap.hi, !(yhi <= f.c()));
            }
        }
        pieces = std::move(next);
    }
    return pieces;
}

int default_hitting_bound(const LorenzMap& f) { return 10 * f.context().degree() * 64; }

std::optional<int> hitting_time_N(const LorenzMap& f, const FieldElement& a, const FieldElement& b,
                                  std::optional<int> bound)
{
    if (!(a < b)) {
        throw LorenzError(ErrorKind::EmptyInterval, "hitting time needs a < b");
    }
    int limit = bound.value_or(default_hitting_bound(f));
    FieldElement x = a;
    FieldElement y = b;
    for (int n = 0; n <= limit; ++n) {
        if (x < f.c() && f.c() < y) {
            return n;
        }
        if (y <= f.c()) {
            x = f.left(x);
            y = f.left(y);
        } else {
            x = f.right(x);
            y = f.right(y);
        }
    }
    return std::nullopt;
}

std::vector<SidedPoint> preimages_one(const LorenzMap& f, const SidedPoint& target)
{
    const FieldContext& k = f.context();
    const FieldElement& y = target.value;
    std::vector<SidedPoint> out;
    if (y == k.one()) {
        out.push_back(f.c_minus());
        if (f.f1() == k.one()) {
            out.push_back(f.one());
        }
        return out;
    }
    if (y.sign() == 0) {
        if (f.f0().sign() == 0) {
            out.push_back(f.zero());
        }
        out.push_back(f.c_plus());
        return out;
    }
    Side zero_side = f.zero_image_doubled() ? Side::Plus : Side::Plain;
    Side one_side = f.one_image_doubled() ? Side::Minus : Side::Plain;
    int at_f0 = compare(y, f.f0());
    int at_f1 = compare(y, f.f1());
    if (at_f0 == 0 && target.side == zero_side) {
        out.push_back(f.zero());
    }
    if (at_f0 > 0) {
        out.push_back({(y - f.left_intercept()) / f.left_slope(), target.side});
    }
    if (at_f1 < 0) {
        out.push_back({(y - f.right_intercept()) / f.right_slope(), target.side});
    }
    if (at_f1 == 0 && target.side == one_side) {
        out.push_back(f.one());
    }
    return out;
}

bool PreimageTree::contains(const SidedPoint& p) const
{
    return std::any_of(nodes.begin(), nodes.end(), [&](const PreimageNode& n) { return n.point == p; });
}

bool PreimageTree::contains_value(const FieldElement& x) const
{
    return std::any_of(nodes.begin(), nodes.end(), [&](const PreimageNode& n) { return n.point.value == x; });
}

PreimageTree preimages(const LorenzMap& f, const std::vector<SidedPoint>& targets, int depth)
{
    PreimageTree tree;
    std::deque<int> frontier;
    for (const auto& t : targets) {
        tree.nodes.push_back({t, 0, -1});
        frontier.push_back(static_cast<int>(tree.nodes.size()) - 1);
    }
    while (!frontier.empty()) {
        int idx = frontier.front();
        frontier.pop_front();
        if (tree.nodes[static_cast<std::size_t>(idx)].depth >= depth) {
            continue;
        }
        SidedPoint target = tree.nodes[static_cast<std::size_t>(idx)].point;
        int d = tree.nodes[static_cast<std::size_t>(idx)].depth + 1;
        for (auto& y : preimages_one(f, target)) {
            tree.nodes.push_back({std::move(y), d, idx});
            frontier.push_back(static_cast<int>(tree.nodes.size()) - 1);
        }
    }
    const FieldContext& k = f.context();
    std::vector<FieldElement> values{k.zero(), k.one()};
    for (const auto& n : tree.nodes) {
        values.push_back(n.point.value);
    }
    std::sort(values.begin(), values.end(), [](const FieldElement& a, const FieldElement& b) { return a < b; });
    tree.mesh = k.zero();
    for (std::size_t i = 1; i < values.size(); ++i) {
        FieldElement gap = values[i] - values[i - 1];
        if (gap > tree.mesh) {
            tree.mesh = gap;
        }
    }
    return tree;
}

PreimageTree preimages(const LorenzMap& f, const SidedPoint& target, int depth)
{
    return preimages(f, std::vector<SidedPoint>{target}, depth);
}

} // namespace lorenz
