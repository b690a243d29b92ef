#include <immintrin.h>

#include "xyorder/simd/kernels.hpp"

namespace xyorder::simd {

// Separate multiply and add (no FMA) so each lane rounds exactly like the
// scalar loop.
void axpy_avx2(double a, const double* x, double* y, std::size_t n) noexcept {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d p0 = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        const __m256d p1 = _mm256_mul_pd(va, _mm256_loadu_pd(x + i + 4));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p0));
        _mm256_storeu_pd(y + i + 4, _mm256_add_pd(_mm256_loadu_pd(y + i + 4), p1));
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p));
    }
    for (; i < n; ++i) {
        y[i] = y[i] + a * x[i];
    }
}

}  // namespace xyorder::simd
