#pragma once

// Double-precision batch kernels for brute-force scans (scalar and AVX2 variants).

#include <cstddef>
#include <string>
#include <vector>

namespace lorenz {

class LorenzMap;

struct FloatMap {
    double c = 0.5;
    double left_slope = 2.0, left_intercept = 0.0;
    double right_slope = 2.0, right_intercept = -1.0;
};

FloatMap to_float_map(const LorenzMap& f);

namespace kernels {

// out[i] = f^n(x[i]) - x[i], branches chosen by x < c.
void residual_scalar(const FloatMap& f, const double* x, double* out, std::size_t count, int n);
void residual_avx2(const FloatMap& f, const double* x, double* out, std::size_t count, int n);

bool avx2_available();
// Picks the AVX2 variant when the CPU supports it.
void residual(const FloatMap& f, const double* x, double* out, std::size_t count, int n);
std::string active_variant();

} // namespace kernels

double float_iterate(const FloatMap& f, double x, int n);

// Points of exact period n found by sign changes of f^n(x) - x on a uniform grid, refined to `tol`.
// Candidates whose orbit passes within 1e-9 of c are dropped: they belong to sided orbits.
std::vector<double> grid_periodic_points(const FloatMap& f, int n, std::size_t grid = 100000, double tol = 1e-10);

} // namespace lorenz
