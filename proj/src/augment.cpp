#include "xyorder/augment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace xyorder {

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double SplitMix64::uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view id) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a offset basis
    for (unsigned char c : id) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return mix64(base ^ h);
}

void AugmentParams::validate() const {
    auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (!in_unit(lambda_x) || !in_unit(lambda_y)) {
        throw InputError("augment: lambda thresholds must lie in [0, 1]");
    }
    if (!std::isfinite(theta) || theta < 0.0) {
        throw InputError("augment: theta must be a non-negative number of pixels");
    }
}

namespace {

double draw_one(SplitMix64& rng, ShiftDistribution dist) noexcept {
    if (dist == ShiftDistribution::Uniform) {
        return 2.0 * rng.uniform01() - 1.0;
    }
    // Box-Muller, cosine branch only so each value costs exactly two draws.
    const double u1 = 1.0 - rng.uniform01();  // (0, 1]
    const double u2 = rng.uniform01();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return std::clamp(z, -1.0, 1.0);
}

}  // namespace

ShiftSample draw_shift(SplitMix64& rng, ShiftDistribution dist) noexcept {
    ShiftSample s;
    s.v_x = draw_one(rng, dist);
    s.v_y = draw_one(rng, dist);
    return s;
}

Document shift_boxes(const Document& doc, const AugmentParams& params, SplitMix64& rng) {
    params.validate();

    // Visit tokens by ascending source_index.
    std::vector<std::size_t> by_source(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        by_source[i] = i;
    }
    std::sort(by_source.begin(), by_source.end(), [&](std::size_t a, std::size_t b) {
        return doc.tokens[a].source_index < doc.tokens[b].source_index;
    });

    Document out = doc;
    for (std::size_t i : by_source) {
        const ShiftSample v = draw_shift(rng, params.distribution);
        TokenBox& b = out.tokens[i];
        if (std::abs(v.v_x) > params.lambda_x) {
            const double dx = params.theta * v.v_x;
            b.x1 += dx;
            b.x2 += dx;
        }
        if (std::abs(v.v_y) > params.lambda_y) {
            const double dy = params.theta * v.v_y;
            b.y1 += dy;
            b.y2 += dy;
        }
    }
    return out;
}

Document shift_boxes(const Document& doc, const AugmentParams& params) {
    SplitMix64 rng(params.seed);
    return shift_boxes(doc, params, rng);
}

XYCutResult augmented_xy_cut(const Document& doc, const AugmentParams& params, SplitMix64& rng) {
    if (doc.empty()) {
        throw InputError("empty document");
    }
    return xy_cut(shift_boxes(doc, params, rng));
}

XYCutResult augmented_xy_cut(const Document& doc, const AugmentParams& params) {
    SplitMix64 rng(params.seed);
    return augmented_xy_cut(doc, params, rng);
}

}  // namespace xyorder
