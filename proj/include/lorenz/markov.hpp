#pragma once

// Markov partitions from eventually periodic critical orbits and transitivity verdicts.

#include "lorenz/lorenzmap.hpp"

#include <string>
#include <vector>

namespace lorenz {

struct MarkovSystem {
    std::vector<FieldElement> breakpoints;  // sorted, includes 0, c, 1
    std::vector<std::vector<int>> matrix;   // matrix[i][j] = 1 when interval i covers interval j
    // Exact image [lo, hi] of each interval under the branch it lies on.
    std::vector<std::pair<FieldElement, FieldElement>> images;

    [[nodiscard]] int size() const { return static_cast<int>(matrix.size()); }
};

MarkovSystem build_markov(const LorenzMap& f, int bound);

struct DynamicsVerdict {
    bool irreducible = false;
    bool primitive = false;
    int period = 0;                           // gcd of cycle lengths when irreducible
    std::string verdict;                      // mixing, transitive_not_mixing, not_transitive
    std::vector<int> witness;                 // forward-invariant proper set of intervals
    bool witness_verified = false;
    std::vector<std::vector<int>> cyclic_classes;
    double spectral_radius = 0.0;
    double entropy = 0.0;
};

DynamicsVerdict dynamics_verdict(const MarkovSystem& m);

// Perron root of a nonnegative 0/1 matrix; relative tolerance 1e-12.
double spectral_radius(const std::vector<std::vector<int>>& matrix);

// Whether the union of the listed intervals is mapped into itself, from the exact images.
bool forward_invariant(const MarkovSystem& m, const std::vector<int>& set);

} // namespace lorenz
