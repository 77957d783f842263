#pragma once

// Points of the doubled space: a value in [0,1] with a side tag.

#include "lorenz/numberfield.hpp"

#include <optional>
#include <string>

namespace lorenz {

enum class Side { Minus = -1, Plain = 0, Plus = 1 };

std::string side_symbol(Side s);  // "-", "0", "+"
Side side_from_symbol(const std::string& s);

struct SidedPoint {
    FieldElement value;
    Side side = Side::Plain;

    static SidedPoint plain(FieldElement v) { return {std::move(v), Side::Plain}; }
    static SidedPoint minus(FieldElement v) { return {std::move(v), Side::Minus}; }
    static SidedPoint plus(FieldElement v) { return {std::move(v), Side::Plus}; }

    [[nodiscard]] std::string to_string() const;
};

// Order of pi values; at equal values minus < plain < plus.
int sided_cmp(const SidedPoint& p, const SidedPoint& q);

inline bool operator==(const SidedPoint& p, const SidedPoint& q) { return sided_cmp(p, q) == 0; }
inline bool operator<(const SidedPoint& p, const SidedPoint& q) { return sided_cmp(p, q) < 0; }
inline bool operator<=(const SidedPoint& p, const SidedPoint& q) { return sided_cmp(p, q) <= 0; }
inline bool operator>(const SidedPoint& p, const SidedPoint& q) { return sided_cmp(p, q) > 0; }
inline bool operator>=(const SidedPoint& p, const SidedPoint& q) { return sided_cmp(p, q) >= 0; }

struct SidedLess {
    bool operator()(const SidedPoint& p, const SidedPoint& q) const { return sided_cmp(p, q) < 0; }
};

class LorenzMap;

struct MetricValue {
    bool decided = false;
    std::optional<int> n;      // N(p, q) when decided
    FieldElement value;        // exact d when decided
    FieldElement lower;        // open lower bound when undecided
    FieldElement upper;        // closed upper bound when undecided
};

// d(p, q) = |pi(p) - pi(q)| + 1/(N(p,q) + 1), with N searched to `depth`.
MetricValue metric_d(const LorenzMap& f, const SidedPoint& p, const SidedPoint& q, int depth);

} // namespace lorenz
