#include "lorenz/kernels.hpp"

#include "lorenz/lorenzmap.hpp"

#include <algorithm>
#include <cmath>

namespace lorenz {

FloatMap to_float_map(const LorenzMap& f)
{
    FloatMap m;
    m.c = f.c().to_double();
    m.left_slope = f.left_slope().to_double();
    m.left_intercept = f.left_intercept().to_double();
    m.right_slope = f.right_slope().to_double();
    m.right_intercept = f.right_intercept().to_double();
    return m;
}

double float_iterate(const FloatMap& f, double x, int n)
{
    for (int i = 0; i < n; ++i) {
        x = x < f.c ? f.left_slope * x + f.left_intercept : f.right_slope * x + f.right_intercept;
    }
    return x;
}

namespace kernels {

void residual_scalar(const FloatMap& f, const double* x, double* out, std::size_t count, int n)
{
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = float_iterate(f, x[i], n) - x[i];
    }
}

#ifndef LORENZ_HAVE_AVX2
void residual_avx2(const FloatMap& f, const double* x, double* out, std::size_t count, int n)
{
    residual_scalar(f, x, out, count, n);
}
#endif

bool avx2_available()
{
#ifdef LORENZ_HAVE_AVX2
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void residual(const FloatMap& f, const double* x, double* out, std::size_t count, int n)
{
    static const bool use_avx2 = avx2_available();
    if (use_avx2) {
        residual_avx2(f, x, out, count, n);
    } else {
        residual_scalar(f, x, out, count, n);
    }
}

std::string active_variant() { return avx2_available() ? "avx2" : "scalar"; }

} // namespace kernels

std::vector<double> grid_periodic_points(const FloatMap& f, int n, std::size_t grid, double tol)
{
    std::vector<double> xs(grid + 1);
    for (std::size_t i = 0; i <= grid; ++i) {
        xs[i] = static_cast<double>(i) / static_cast<double>(grid);
    }
    std::vector<double> g(grid + 1);
    kernels::residual(f, xs.data(), g.data(), xs.size(), n);

    auto residual = [&](double x) { return float_iterate(f, x, n) - x; };
    auto minimal = [&](double x) {
        for (int d = 1; d < n; ++d) {
            if (n % d == 0 && std::abs(float_iterate(f, x, d) - x) < 1e-7) {
                return false;
            }
        }
        return true;
    };

    auto avoids_c = [&](double x) {
        for (int i = 0; i < n; ++i, x = float_iterate(f, x, 1)) {
            if (std::abs(x - f.c) < 1e-9) {
                return false;
            }
        }
        return true;
    };

    std::vector<double> roots;
    auto accept = [&](double x) {
        if (std::abs(residual(x)) < 1e-8 && minimal(x) && avoids_c(x)) {
            roots.push_back(x);
        }
    };
    for (std::size_t i = 0; i <= grid; ++i) {
        if (g[i] == 0.0) {
            accept(xs[i]);
        }
    }
    // Residual change on a jump-free cell is at most lip * width.
    const double lip = std::pow(std::max(f.left_slope, f.right_slope), n) + 1.0;
    auto bisect = [&](double lo, double hi, bool lo_neg) {
        while (hi - lo > tol) {
            double mid = 0.5 * (lo + hi);
            if ((residual(mid) < 0.0) == lo_neg) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        accept(0.5 * (lo + hi));
    };
    // Cells holding a jump are split until the jump is isolated, so roots next to it are not masked.
    auto scan = [&](auto& self, double lo, double hi, double rlo, double rhi) -> void {
        if (rlo == 0.0 || rhi == 0.0) {
            return;
        }
        bool jump = std::abs(rhi - rlo) > 1.01 * lip * (hi - lo) + 1e-12;
        if (!jump) {
            if ((rlo < 0.0) != (rhi < 0.0)) {
                bisect(lo, hi, rlo < 0.0);
            }
            return;
        }
        if (hi - lo <= tol) {
            return;
        }
        double mid = 0.5 * (lo + hi);
        double rmid = residual(mid);
        if (rmid == 0.0) {
            accept(mid);
        }
        self(self, lo, mid, rlo, rmid);
        self(self, mid, hi, rmid, rhi);
    };
    for (std::size_t i = 0; i < grid; ++i) {
        scan(scan, xs[i], xs[i + 1], g[i], g[i + 1]);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());
    return roots;
}

} // namespace lorenz
