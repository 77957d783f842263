#pragma once

// Periodic orbits from lap fixed points, n(k)-cycles and the fixed-point lemma.

#include "lorenz/lorenzmap.hpp"

#include <optional>
#include <vector>

namespace lorenz {

struct NkCycle {
    int n = 0;
    int k = 0;
    bool primary = false;
    bool strict = false;
};

struct PeriodicOrbit {
    std::vector<SidedPoint> points;  // sorted
    int period = 0;
    int right_count = 0;             // points >= c_+
    bool contains_sided = false;
    std::optional<NkCycle> nk;

    // z_j in sorted order.
    [[nodiscard]] const FieldElement& z(int j) const { return points[static_cast<std::size_t>(j)].value; }
};

struct PeriodicOrbitReport {
    std::vector<PeriodicOrbit> orbits;  // by period, then leftmost point
    std::optional<int> kappa;           // least period among plain and sided orbits (f_hat convention)
    std::optional<int> plain_kappa;     // least period among plain orbits only
    std::optional<int> c_minus_period;  // period of c_- under f_hat when c_- is periodic
    std::optional<int> c_plus_period;

    [[nodiscard]] std::vector<const PeriodicOrbit*> with_period(int n) const;
};

PeriodicOrbitReport periodic_orbits(const LorenzMap& f, int n_max, int horizon = 200);

// Plain periodic points of exact period n, one per lap solution.
std::vector<FieldElement> plain_periodic_points(const LorenzMap& f, int n);

std::optional<NkCycle> detect_nk_cycle(const LorenzMap& f, const PeriodicOrbit& orbit);

struct FixedPointLemma {
    int m = 0;
    SidedPoint witness;       // element of f_hat^{-m}({c-, c+}) inside [f_hat(0), f_hat(1)]
    bool found_fixed_point = false;
    FieldElement fixed_point; // fixed point of f^{m+2} from its laps
};

FixedPointLemma fixed_point_lemma_check(const LorenzMap& f, int bound);

} // namespace lorenz
