#pragma once

// Dilated conditional position encoding, forward pass only.
//
// A dilated convolution with rate l sums input taps spaced l apart:
//
//   out(p) = sum_t in(p - l*t) * w(t),   t in {-(k-1)/2, ..., (k-1)/2}
//
// with zero padding of l*(k-1)/2 on each side so the output keeps the input
// resolution. The text branch runs 1D convolutions over the token sequence, the
// visual branch 2D convolutions over the pooled image grid; their outputs are
// concatenated (grid flattened row-major).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "xyorder/simd/kernels.hpp"

namespace xyorder {

/// L x C row-major: values[p * channels + c].
struct FeatureSeq {
    std::size_t length = 0;
    std::size_t channels = 0;
    std::vector<double> values;

    FeatureSeq() = default;
    FeatureSeq(std::size_t length, std::size_t channels);
    FeatureSeq(std::size_t length, std::size_t channels, std::vector<double> values);

    double& at(std::size_t p, std::size_t c) { return values[p * channels + c]; }
    double at(std::size_t p, std::size_t c) const { return values[p * channels + c]; }
    std::span<double> row(std::size_t p) { return {values.data() + p * channels, channels}; }
    std::span<const double> row(std::size_t p) const {
        return {values.data() + p * channels, channels};
    }

    friend bool operator==(const FeatureSeq&, const FeatureSeq&) = default;
};

/// H x W x C row-major: values[(y * width + x) * channels + c].
struct FeatureGrid {
    std::size_t height = 0;
    std::size_t width = 0;
    std::size_t channels = 0;
    std::vector<double> values;

    FeatureGrid() = default;
    FeatureGrid(std::size_t height, std::size_t width, std::size_t channels);
    FeatureGrid(std::size_t height, std::size_t width, std::size_t channels,
                std::vector<double> values);

    double& at(std::size_t y, std::size_t x, std::size_t c) {
        return values[(y * width + x) * channels + c];
    }
    double at(std::size_t y, std::size_t x, std::size_t c) const {
        return values[(y * width + x) * channels + c];
    }

    friend bool operator==(const FeatureGrid&, const FeatureGrid&) = default;
};

/// Convolution weights. Taps are indexed 0..k-1 per spatial axis, tap i
/// standing for offset t = i - (k-1)/2. Layout, output channel fastest:
///   rank 1: weights[(i * in + ci) * out + co]
///   rank 2: weights[((iy * k + ix) * in + ci) * out + co]
struct DilatedKernel {
    std::size_t rank = 1;
    std::size_t size = 1;
    std::size_t dilation = 1;
    std::size_t in_channels = 1;
    std::size_t out_channels = 1;
    std::vector<double> weights;
    std::vector<double> bias;  // empty, or one per output channel

    static DilatedKernel conv1d(std::size_t size, std::size_t dilation, std::size_t in_channels,
                                std::size_t out_channels, std::vector<double> weights,
                                std::vector<double> bias = {});
    static DilatedKernel conv2d(std::size_t size, std::size_t dilation, std::size_t in_channels,
                                std::size_t out_channels, std::vector<double> weights,
                                std::vector<double> bias = {});

    /// Xavier-uniform weights from a seeded SplitMix64 stream, zero bias.
    static DilatedKernel seeded(std::size_t rank, std::size_t size, std::size_t dilation,
                                std::size_t in_channels, std::size_t out_channels,
                                std::uint64_t seed);

    std::size_t taps() const noexcept { return rank == 1 ? size : size * size; }
    std::size_t padding() const noexcept { return dilation * (size - 1) / 2; }

    /// k^rank * in * out (+ bias). Does not depend on the dilation rate.
    std::size_t parameter_count() const noexcept { return weights.size() + bias.size(); }

    /// Throws InputError on even/zero size, zero dilation, bad weight count.
    void validate() const;
};

FeatureSeq dilated_conv_1d(const FeatureSeq& in, const DilatedKernel& kernel,
                           simd::Isa isa = simd::best_isa());

FeatureGrid dilated_conv_2d(const FeatureGrid& in, const DilatedKernel& kernel,
                            simd::Isa isa = simd::best_isa());

struct LayerSpec {
    std::size_t kernel_size = 3;
    std::size_t dilation = 1;

    friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

/// 1 + sum_i (k_i - 1) * l_i. Throws InputError on an empty stack.
std::size_t receptive_field(std::span<const LayerSpec> stack);

struct DcpeConfig {
    std::size_t channels = 8;
    std::vector<LayerSpec> text_layers{{3, 1}, {3, 2}};
    std::vector<LayerSpec> visual_layers{{3, 1}, {3, 2}};

    void validate() const;
};

struct DcpeModel {
    DcpeConfig config;
    std::vector<DilatedKernel> text_kernels;    // rank 1, channels -> channels
    std::vector<DilatedKernel> visual_kernels;  // rank 2, channels -> channels

    /// One seeded kernel per configured layer.
    static DcpeModel seeded(const DcpeConfig& config, std::uint64_t seed);

    /// Kernels must match the config layer by layer.
    void validate() const;
};

/// Text branch over `text`, visual branch over `visual`, then concatenation:
/// the result has text.length + height * width rows of `channels` values.
FeatureSeq dcpe_forward(const FeatureSeq& text, const FeatureGrid& visual, const DcpeModel& model,
                        simd::Isa isa = simd::best_isa());

}  // namespace xyorder
