#include "lorenz/rotation.hpp"

#include "lorenz/error.hpp"

#include <algorithm>
#include <map>

namespace lorenz {

namespace {

RotationSample run_sample(const LorenzMap& f, SidedPoint p, int n_iter)
{
    RotationSample s;
    s.point = p;
    s.n_iter = n_iter;
    const SidedPoint cp = f.c_plus();
    std::map<SidedPoint, int, SidedLess> seen;
    std::vector<int> bits;
    const std::vector<int> marks{std::max(1, n_iter / 4), std::max(1, n_iter / 2), n_iter};
    for (int i = 0; i < n_iter; ++i) {
        auto [it, fresh] = seen.emplace(p, i);
        if (!fresh && !s.exact) {
            int start = it->second;
            int ones = 0;
            for (int j = start; j < i; ++j) {
                ones += bits[static_cast<std::size_t>(j)];
            }
            s.exact = Rational(ones, i - start);
            s.exact->canonicalize();
            // The rest of the orbit repeats the cycle.
            for (int j = i; j < n_iter; ++j) {
                bits.push_back(bits[static_cast<std::size_t>(start + (j - start) % (i - start))]);
            }
            break;
        }
        bits.push_back(p >= cp ? 1 : 0);
        p = eval_sided(f, p);
    }
    int count = 0;
    for (int i = 0; i < n_iter; ++i) {
        count += bits[static_cast<std::size_t>(i)];
        if (std::find(marks.begin(), marks.end(), i + 1) != marks.end()) {
            s.partial.emplace_back(i + 1, static_cast<double>(count) / (i + 1));
        }
    }
    s.m_n = count;
    s.estimate = static_cast<double>(count) / n_iter;
    double plo = s.estimate;
    double phi = s.estimate;
    for (const auto& [n, e] : s.partial) {
        plo = std::min(plo, e);
        phi = std::max(phi, e);
    }
    s.converged = phi - plo <= 2.0 / n_iter;
    return s;
}

} // namespace

RotationReport rotation_analysis(const LorenzMap& f, const std::vector<SidedPoint>& samples, int n_iter,
                                 const std::optional<NkCycle>& cycle)
{
    RotationReport rep;
    for (const auto& p0 : samples) {
        try {
            rep.samples.push_back(run_sample(f, p0, n_iter));
        } catch (const LorenzError& e) {
            // A plain orbit that lands on c lives in the doubled space; follow the left copy.
            if (e.kind() != ErrorKind::RequiresSide || p0.side != Side::Plain) {
                throw;
            }
            rep.samples.push_back(run_sample(f, SidedPoint::minus(p0.value), n_iter));
        }
    }
    if (!rep.samples.empty()) {
        rep.lo = rep.hi = rep.samples.front().estimate;
        for (const auto& s : rep.samples) {
            rep.lo = std::min(rep.lo, s.estimate);
            rep.hi = std::max(rep.hi, s.estimate);
        }
    }
    if (cycle) {
        rep.degenerate = true;
        rep.value = Rational(cycle->k, cycle->n);
        rep.basis = "cycle";
    } else if (!rep.samples.empty() && rep.hi - rep.lo <= 2.0 / n_iter) {
        rep.degenerate = true;
        rep.basis = "estimates";
    } else {
        rep.basis = "none";
    }
    return rep;
}

} // namespace lorenz
