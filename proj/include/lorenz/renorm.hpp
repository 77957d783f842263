#pragma once

// Renormalization validation and search, invariant-set diagnostics and matching.

#include "lorenz/lorenzmap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lorenz {

struct Renormalization {
    int l = 0;
    int r = 0;
    SidedPoint u_hat;       // f_hat^r(c_+)
    SidedPoint v_hat;       // f_hat^l(c_-)
    FieldElement u, v;      // pi values
    FieldElement g_u, g_v;  // f^l(u_+) and f^r(v_-)
    bool expanding = false;
    // Sided readings used for boundary values, e.g. "g(u)=f^l(u_+)".
    std::vector<std::string> conventions;
};

struct RenormCheck {
    bool valid = false;
    std::string reason;  // interval-degenerate, continuity-broken, image-escape, order-violated
    Renormalization g;
};

// pi(f_hat^n(x_side)): n-fold one-sided limit starting from x.
FieldElement limit_iterate(const LorenzMap& f, FieldElement x, int n, Side side);

RenormCheck validate_renorm(const LorenzMap& f, int l, int r);

struct RenormSearch {
    std::vector<Renormalization> valid;   // sorted by (l, r)
    std::vector<std::pair<int, int>> pareto_minimal;
    std::optional<std::pair<int, int>> unique_minimum;
};

RenormSearch search_renorms(const LorenzMap& f, int l_max, int r_max);

struct InvariantSetRenorm {
    FieldElement e_minus, e_plus;
    std::optional<int> l, r;
    bool periodic_ok = false;          // f^l(e_-) = e_- and f^r(e_+) = e_+
    std::optional<RenormCheck> g;
    bool preimage_closed = true;       // f_hat^{-1}(E) within E u {0,1} up to depth
    std::optional<SidedPoint> witness; // first preimage outside E u {0,1}
    int witness_depth = 0;
};

InvariantSetRenorm renorm_from_invariant_set(const LorenzMap& f, const std::vector<FieldElement>& E, int depth);

enum class SampleClass { InF, InJ, Unknown };

struct EndpointOrbit {
    std::optional<bool> meets;   // orbit enters (u, v); nullopt when undecided
    std::optional<int> first_hit;
};

struct InvariantAnalysis {
    std::string lem_inv;  // "invariant", "not_invariant", "undecided"
    EndpointOrbit u_orbit, v_orbit;
    std::vector<SampleClass> samples;
    int in_f = 0, in_j = 0, unknown = 0;
    std::optional<bool> d_o_closed;
    std::optional<SidedPoint> d_o_witness;
};

InvariantAnalysis invariant_set_analysis(const LorenzMap& f, const Renormalization& g, int depth,
                                         const std::vector<FieldElement>& samples = {},
                                         const std::vector<FieldElement>& periodic_orbit = {});

struct Matching {
    std::optional<int> eta;
    bool sided_equal = false;        // f_hat^eta(c_-) = f_hat^eta(c_+) as sided points
    bool persists = false;           // pi values agree for every later index within the bound
    std::optional<int> separates_at; // first later index where pi values differ
};

Matching matching(const LorenzMap& f, int eta_max);

} // namespace lorenz
