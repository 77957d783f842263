#include "lorenz/markov.hpp"

#include "lorenz/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace lorenz {

namespace {

struct ValueLess {
    bool operator()(const FieldElement& a, const FieldElement& b) const { return a < b; }
};

std::vector<int> reachable(const std::vector<std::vector<int>>& m, int start)
{
    const int n = static_cast<int>(m.size());
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0 && !seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                queue.push_back(j);
            }
        }
    }
    std::vector<int> out;
    for (int j = 0; j < n; ++j) {
        if (seen[static_cast<std::size_t>(j)]) {
            out.push_back(j);
        }
    }
    return out;
}

using Matrix = std::vector<std::vector<double>>;

Matrix multiply(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size();
    Matrix c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

} // namespace

MarkovSystem build_markov(const LorenzMap& f, int bound)
{
    std::set<FieldElement, ValueLess> pts;
    pts.insert(f.context().zero());
    pts.insert(f.context().one());
    pts.insert(f.c());
    for (const auto& start : {f.c_minus(), f.c_plus()}) {
        Orbit o = orbit(f, start, bound);
        if (!o.recurrent()) {
            throw LorenzError(ErrorKind::NotEventuallyPeriodic,
                              "orbit of " + start.to_string() + " does not recur within " + std::to_string(bound));
        }
        for (const auto& p : o.points) {
            pts.insert(p.value);
        }
    }
    MarkovSystem m;
    m.breakpoints.assign(pts.begin(), pts.end());
    const std::size_t n = m.breakpoints.size() - 1;
    m.matrix.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const FieldElement& a = m.breakpoints[i];
        const FieldElement& b = m.breakpoints[i + 1];
        FieldElement lo = b <= f.c() ? f.left(a) : f.right(a);
        FieldElement hi = b <= f.c() ? f.left(b) : f.right(b);
        auto lo_it = pts.find(lo);
        auto hi_it = pts.find(hi);
        if (lo_it == pts.end() || hi_it == pts.end()) {
            throw LorenzError(ErrorKind::AlignmentFailure,
                              "image of interval " + std::to_string(i) + " does not end on breakpoints");
        }
        auto first = static_cast<std::size_t>(std::distance(pts.begin(), lo_it));
        auto last = static_cast<std::size_t>(std::distance(pts.begin(), hi_it));
        for (std::size_t j = first; j < last; ++j) {
            m.matrix[i][j] = 1;
        }
        m.images.emplace_back(std::move(lo), std::move(hi));
    }
    return m;
}

double spectral_radius(const std::vector<std::vector<int>>& matrix)
{
    const std::size_t n = matrix.size();
    if (n == 0) {
        return 0.0;
    }
    // Power iteration on I + M by repeated squaring; I + M is primitive whenever M is irreducible.
    Matrix a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = matrix[i][j] + (i == j ? 1.0 : 0.0);
        }
    }
    const Matrix base = a;
    double estimate = 0.0;
    for (int step = 0; step < 200; ++step) {
        std::vector<double> x(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = std::accumulate(a[i].begin(), a[i].end(), 0.0);
        }
        double lo = INFINITY;
        double hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] <= 0.0) {
                continue;
            }
            double y = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                y += base[i][j] * x[j];
            }
            lo = std::min(lo, y / x[i]);
            hi = std::max(hi, y / x[i]);
        }
        estimate = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * hi) {
            break;
        }
        a = multiply(a, a);
        double scale = 0.0;
        for (const auto& row : a) {
            for (double v : row) {
                scale = std::max(scale, v);
            }
        }
        for (auto& row : a) {
            for (double& v : row) {
                v /= scale;
            }
        }
    }
    return estimate - 1.0;
}

bool forward_invariant(const MarkovSystem& m, const std::vector<int>& set)
{
    std::vector<std::pair<const FieldElement*, const FieldElement*>> members;
    for (int i : set) {
        members.emplace_back(&m.breakpoints[static_cast<std::size_t>(i)],
                             &m.breakpoints[static_cast<std::size_t>(i) + 1]);
    }
    for (int i : set) {
        const auto& [lo, hi] = m.images[static_cast<std::size_t>(i)];
        // Each breakpoint-interval inside [lo, hi] must belong to the set.
        for (std::size_t j = 0; j + 1 < m.breakpoints.size(); ++j) {
            if (m.breakpoints[j] < lo || m.breakpoints[j + 1] > hi) {
                continue;
            }
            bool in = std::any_of(members.begin(), members.end(), [&](const auto& p) {
                return *p.first == m.breakpoints[j] && *p.second == m.breakpoints[j + 1];
            });
            if (!in) {
                return false;
            }
        }
    }
    return true;
}

DynamicsVerdict dynamics_verdict(const MarkovSystem& m)
{
    DynamicsVerdict out;
    const int n = m.size();
    std::vector<int> smallest;
    out.irreducible = true;
    for (int i = 0; i < n; ++i) {
        std::vector<int> r = reachable(m.matrix, i);
        if (static_cast<int>(r.size()) < n) {
            out.irreducible = false;
            if (smallest.empty() || r.size() < smallest.size()) {
                smallest = std::move(r);
            }
        }
    }
    out.spectral_radius = spectral_radius(m.matrix);
    out.entropy = out.spectral_radius > 0.0 ? std::log(out.spectral_radius) : 0.0;
    if (!out.irreducible) {
        out.verdict = "not_transitive";
        out.witness = smallest;
        out.witness_verified = forward_invariant(m, out.witness);
        return out;
    }
    // Period from BFS levels: gcd of level[i] + 1 - level[j] over edges.
    std::vector<int> level(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{0};
    level[0] = 0;
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            if (m.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0 &&
                level[static_cast<std::size_t>(j)] < 0) {
                level[static_cast<std::size_t>(j)] = level[static_cast<std::size_t>(i)] + 1;
                queue.push_back(j);
            }
        }
    }
    int period = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                period = std::gcd(period, std::abs(level[static_cast<std::size_t>(i)] + 1 -
                                                   level[static_cast<std::size_t>(j)]));
            }
        }
    }
    out.period = period;
    out.primitive = period == 1;
    out.verdict = out.primitive ? "mixing" : "transitive_not_mixing";
    out.cyclic_classes.resize(static_cast<std::size_t>(period));
    for (int i = 0; i < n; ++i) {
        out.cyclic_classes[static_cast<std::size_t>(level[static_cast<std::size_t>(i)] % period)].push_back(i);
    }
    return out;
}

} // namespace lorenz
