#include "lorenz/kernels.hpp"

#include <immintrin.h>

namespace lorenz::kernels {

void residual_avx2(const FloatMap& f, const double* x, double* out, std::size_t count, int n)
{
    const __m256d c = _mm256_set1_pd(f.c);
    const __m256d sl = _mm256_set1_pd(f.left_slope);
    const __m256d tl = _mm256_set1_pd(f.left_intercept);
    const __m256d sr = _mm256_set1_pd(f.right_slope);
    const __m256d tr = _mm256_set1_pd(f.right_intercept);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d x0 = _mm256_loadu_pd(x + i);
        __m256d y = x0;
        for (int k = 0; k < n; ++k) {
            const __m256d left = _mm256_cmp_pd(y, c, _CMP_LT_OQ);
            const __m256d s = _mm256_blendv_pd(sr, sl, left);
            const __m256d t = _mm256_blendv_pd(tr, tl, left);
            y = _mm256_add_pd(_mm256_mul_pd(s, y), t);
        }
        _mm256_storeu_pd(out + i, _mm256_sub_pd(y, x0));
    }
    if (i < count) {
        residual_scalar(f, x + i, out + i, count - i, n);
    }
}

} // namespace lorenz::kernels
