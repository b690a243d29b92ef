#include "xyorder/simd/kernels.hpp"

namespace xyorder::simd {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = y[i] + a * x[i];
    }
}

}  // namespace xyorder::simd
