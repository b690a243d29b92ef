#include <stdexcept>

#include "xyorder/simd/kernels.hpp"

namespace xyorder::simd {

const char* isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "?";
}

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2: {
#if defined(XYORDER_HAVE_AVX2)
            static const bool avx2 = __builtin_cpu_supports("avx2");
            return avx2;
#else
            return false;
#endif
        }
    }
    return false;
}

Isa best_isa() noexcept {
    static const Isa best = isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    return best;
}

AxpyFn resolve_axpy(Isa isa) noexcept {
#if defined(XYORDER_HAVE_AVX2)
    if (isa == Isa::Avx2 && isa_supported(Isa::Avx2)) {
        return &axpy_avx2;
    }
#endif
    (void)isa;
    return &axpy_scalar;
}

void axpy(Isa isa, double a, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("axpy: length mismatch");
    }
    resolve_axpy(isa)(a, x.data(), y.data(), x.size());
}

}  // namespace xyorder::simd
