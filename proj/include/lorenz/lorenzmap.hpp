#pragma once

// Piecewise-linear expanding Lorenz maps and their action on sided points.

#include "lorenz/sidedspace.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lorenz {

enum class Family { ModOne, TwoSlope };

class LorenzMap {
public:
    // f(x) = beta*x + alpha (mod 1).
    static LorenzMap mod_one(const FieldElement& beta, const FieldElement& alpha);
    // f(x) = a*x + 1 - a*c on [0,c), b*(x - c) on (c,1].
    static LorenzMap two_slope(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                               bool require_distinct_slopes = false);

    [[nodiscard]] Family family() const { return family_; }
    [[nodiscard]] const FieldContext& context() const { return c_.context(); }

    [[nodiscard]] const FieldElement& c() const { return c_; }
    [[nodiscard]] const FieldElement& left_slope() const { return sl_; }
    [[nodiscard]] const FieldElement& left_intercept() const { return tl_; }
    [[nodiscard]] const FieldElement& right_slope() const { return sr_; }
    [[nodiscard]] const FieldElement& right_intercept() const { return tr_; }
    // Parameters as given: (beta, alpha) or (a, b).
    [[nodiscard]] const FieldElement& param1() const { return p1_; }
    [[nodiscard]] const FieldElement& param2() const { return p2_; }

    [[nodiscard]] FieldElement f0() const { return tl_; }
    [[nodiscard]] FieldElement f1() const { return sr_ + tr_; }

    [[nodiscard]] FieldElement left(const FieldElement& x) const { return sl_ * x + tl_; }
    [[nodiscard]] FieldElement right(const FieldElement& x) const { return sr_ * x + tr_; }
    // One-sided limit of f at x from the given side (Minus uses the left branch at c).
    [[nodiscard]] FieldElement limit(const FieldElement& x, Side from) const;
    // Plain f(x) for x != c.
    [[nodiscard]] FieldElement apply(const FieldElement& x) const;

    // Whether the plain orbit of f(0) (resp. f(1)) reaches c; cached.
    [[nodiscard]] bool zero_image_doubled() const;
    [[nodiscard]] bool one_image_doubled() const;

    [[nodiscard]] SidedPoint c_minus() const { return SidedPoint::minus(c_); }
    [[nodiscard]] SidedPoint c_plus() const { return SidedPoint::plus(c_); }
    [[nodiscard]] SidedPoint zero() const { return SidedPoint::plain(context().zero()); }
    [[nodiscard]] SidedPoint one() const { return SidedPoint::plain(context().one()); }

    [[nodiscard]] std::string describe() const;

    struct Cache;

private:
    LorenzMap() = default;
    Family family_ = Family::ModOne;
    FieldElement p1_, p2_;
    FieldElement sl_, tl_, sr_, tr_, c_;
    std::shared_ptr<Cache> cache_;
};

SidedPoint eval_sided(const LorenzMap& f, const SidedPoint& p);
SidedPoint iterate(const LorenzMap& f, SidedPoint p, int n);

struct Orbit {
    std::vector<SidedPoint> points;           // p, f(p), ...
    std::optional<int> preperiod;             // rho: first repeated index
    std::optional<int> period;                // tau
    bool truncated = false;                   // float mode lost the sign

    [[nodiscard]] bool recurrent() const { return period.has_value(); }
    // Point at index i, following the cycle beyond the stored prefix.
    [[nodiscard]] const SidedPoint& at(int i) const;
};

Orbit orbit(const LorenzMap& f, const SidedPoint& p, int max_steps);

struct Lap {
    FieldElement lo, hi;       // closed interval of the piece
    FieldElement slope, intercept;
    std::string word;          // branch symbols, first iterate first
};

std::vector<Lap> laps(const LorenzMap& f, int n);

int default_hitting_bound(const LorenzMap& f);
// Least n >= 0 with c in f^n((a,b)); nullopt if not found within the bound.
std::optional<int> hitting_time_N(const LorenzMap& f, const FieldElement& a, const FieldElement& b,
                                  std::optional<int> bound = std::nullopt);

// All sided y with f_hat(y) = target (single step).
std::vector<SidedPoint> preimages_one(const LorenzMap& f, const SidedPoint& target);

struct PreimageNode {
    SidedPoint point;
    int depth = 0;
    int parent = -1;  // index into nodes, -1 for roots
};

struct PreimageTree {
    std::vector<PreimageNode> nodes;
    // Largest gap between consecutive pi values among all nodes, with 0 and 1 as sentinels.
    FieldElement mesh;
    [[nodiscard]] bool contains(const SidedPoint& p) const;
    [[nodiscard]] bool contains_value(const FieldElement& x) const;
};

PreimageTree preimages(const LorenzMap& f, const std::vector<SidedPoint>& targets, int depth);
PreimageTree preimages(const LorenzMap& f, const SidedPoint& target, int depth);

} // namespace lorenz
