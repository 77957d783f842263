#pragma once

// Rotation numbers of sided orbits and rotation-interval estimates.

#include "lorenz/cycles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lorenz {

struct RotationSample {
    SidedPoint point;
    int n_iter = 0;
    int m_n = 0;                           // indices i < n_iter with f_hat^i(x) >= c_+
    double estimate = 0.0;                 // m_n / n_iter
    std::vector<std::pair<int, double>> partial;  // (n, m_n / n) at n_iter/4, n_iter/2, n_iter
    bool converged = false;                // partial estimates agree within 2/n_iter
    std::optional<Rational> exact;         // ones in period / period, for recurrent orbits
};

struct RotationReport {
    std::vector<RotationSample> samples;
    double lo = 0.0;
    double hi = 0.0;
    bool degenerate = false;
    std::optional<Rational> value;         // k/n from a supplied cycle
    std::string basis;                     // "cycle", "estimates" or "none"
};

RotationReport rotation_analysis(const LorenzMap& f, const std::vector<SidedPoint>& samples, int n_iter,
                                 const std::optional<NkCycle>& cycle = std::nullopt);

} // namespace lorenz
