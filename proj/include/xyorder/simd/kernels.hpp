#pragma once

// Inner-loop arithmetic for the convolution module, with one implementation per
// instruction set. The scalar variant is the reference; every SIMD variant
// performs the same operations in the same order per lane and must agree with
// it bitwise (the build disables FMA contraction).

#include <cstddef>
#include <span>

namespace xyorder::simd {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa) noexcept;

/// True if this build contains the variant and the running CPU supports it.
bool isa_supported(Isa isa) noexcept;

/// Widest supported variant, probed once.
Isa best_isa() noexcept;

using AxpyFn = void (*)(double a, const double* x, double* y, std::size_t n) noexcept;

/// Implementation for `isa`, or the scalar one if `isa` is unavailable.
AxpyFn resolve_axpy(Isa isa) noexcept;

/// y[i] += a * x[i]. Requires x.size() == y.size().
void axpy(Isa isa, double a, std::span<const double> x, std::span<double> y);

void axpy_scalar(double a, const double* x, double* y, std::size_t n) noexcept;

#if defined(XYORDER_HAVE_AVX2)
void axpy_avx2(double a, const double* x, double* y, std::size_t n) noexcept;
#endif

}  // namespace xyorder::simd
