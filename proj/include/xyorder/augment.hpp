#pragma once

// Randomized box-shift augmentation for XY Cut.
//
// Each box draws a pair (v_x, v_y). If |v_x| > lambda_x the box moves by
// theta * v_x along x (both x1 and x2); likewise for y. Running XY Cut on the
// shifted boxes yields a different but still proper reading order whenever a
// shift opens or closes a valley.

#include <cstdint>
#include <string_view>

#include "xyorder/geometry.hpp"
#include "xyorder/xycut.hpp"

namespace xyorder {

/// SplitMix64 (Steele, Lea & Flood 2014). Chosen for a fixed, documented
/// output sequence across platforms and standard libraries.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() noexcept;

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// The SplitMix64 output finalizer applied to a single value.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Per-document seed: mix64(base ^ fnv1a64(id)). Independent of the order in
/// which documents are processed.
std::uint64_t derive_seed(std::uint64_t base, std::string_view id) noexcept;

enum class ShiftDistribution {
    Uniform,        // v ~ U[-1, 1)
    ClampedNormal,  // v ~ N(0, 1) via Box-Muller, clamped to [-1, 1]
};

struct AugmentParams {
    double lambda_x = 0.5;
    double lambda_y = 0.5;
    double theta = 5.0;
    std::uint64_t seed = 0;
    ShiftDistribution distribution = ShiftDistribution::Uniform;

    /// Throws InputError unless 0 <= lambda <= 1 and theta >= 0 (all finite).
    void validate() const;
};

struct ShiftSample {
    double v_x = 0.0;
    double v_y = 0.0;
};

/// Draws one (v_x, v_y) pair: v_x first, then v_y.
ShiftSample draw_shift(SplitMix64& rng, ShiftDistribution dist) noexcept;

/// Shifts every box independently. Draws are consumed in ascending
/// source_index order regardless of the token sequence, so appending tokens
/// never changes the shifts of earlier ones. Widths and heights are preserved.
Document shift_boxes(const Document& doc, const AugmentParams& params, SplitMix64& rng);

/// Seeds a fresh generator from params.seed.
Document shift_boxes(const Document& doc, const AugmentParams& params);

/// xy_cut on the shifted document. The order refers to the original tokens'
/// source indices; the shifted geometry is discarded.
XYCutResult augmented_xy_cut(const Document& doc, const AugmentParams& params, SplitMix64& rng);
XYCutResult augmented_xy_cut(const Document& doc, const AugmentParams& params);

}  // namespace xyorder
