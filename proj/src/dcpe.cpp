#include "xyorder/dcpe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xyorder/augment.hpp"
#include "xyorder/geometry.hpp"

namespace xyorder {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw InputError(std::string(what) + ": non-finite value");
        }
    }
}

}  // namespace

FeatureSeq::FeatureSeq(std::size_t length, std::size_t channels)
    : FeatureSeq(length, channels, std::vector<double>(length * channels, 0.0)) {}

FeatureSeq::FeatureSeq(std::size_t length_, std::size_t channels_, std::vector<double> values_)
    : length(length_), channels(channels_), values(std::move(values_)) {
    if (length == 0 || channels == 0) {
        throw InputError("feature sequence needs length >= 1 and channels >= 1");
    }
    if (values.size() != length * channels) {
        throw InputError("feature sequence: expected " + std::to_string(length * channels) +
                         " values, got " + std::to_string(values.size()));
    }
    require_finite(values, "feature sequence");
}

FeatureGrid::FeatureGrid(std::size_t height, std::size_t width, std::size_t channels)
    : FeatureGrid(height, width, channels, std::vector<double>(height * width * channels, 0.0)) {}

FeatureGrid::FeatureGrid(std::size_t height_, std::size_t width_, std::size_t channels_,
                         std::vector<double> values_)
    : height(height_), width(width_), channels(channels_), values(std::move(values_)) {
    if (height == 0 || width == 0 || channels == 0) {
        throw InputError("feature grid needs height, width and channels >= 1");
    }
    if (values.size() != height * width * channels) {
        throw InputError("feature grid: expected " + std::to_string(height * width * channels) +
                         " values, got " + std::to_string(values.size()));
    }
    require_finite(values, "feature grid");
}

void DilatedKernel::validate() const {
    if (rank != 1 && rank != 2) {
        throw InputError("kernel rank must be 1 or 2");
    }
    if (size == 0 || size % 2 == 0) {
        throw InputError("kernel size must be odd, got " + std::to_string(size));
    }
    if (dilation == 0) {
        throw InputError("dilation rate must be >= 1");
    }
    if (in_channels == 0 || out_channels == 0) {
        throw InputError("kernel channels must be >= 1");
    }
    if (weights.size() != taps() * in_channels * out_channels) {
        throw InputError("kernel: expected " + std::to_string(taps() * in_channels * out_channels) +
                         " weights, got " + std::to_string(weights.size()));
    }
    if (!bias.empty() && bias.size() != out_channels) {
        throw InputError("kernel: bias must be empty or one value per output channel");
    }
    require_finite(weights, "kernel weights");
    require_finite(bias, "kernel bias");
}

DilatedKernel DilatedKernel::conv1d(std::size_t size, std::size_t dilation,
                                    std::size_t in_channels, std::size_t out_channels,
                                    std::vector<double> weights, std::vector<double> bias) {
    DilatedKernel k{1, size, dilation, in_channels, out_channels, std::move(weights),
                    std::move(bias)};
    k.validate();
    return k;
}

DilatedKernel DilatedKernel::conv2d(std::size_t size, std::size_t dilation,
                                    std::size_t in_channels, std::size_t out_channels,
                                    std::vector<double> weights, std::vector<double> bias) {
    DilatedKernel k{2, size, dilation, in_channels, out_channels, std::move(weights),
                    std::move(bias)};
    k.validate();
    return k;
}

DilatedKernel DilatedKernel::seeded(std::size_t rank, std::size_t size, std::size_t dilation,
                                    std::size_t in_channels, std::size_t out_channels,
                                    std::uint64_t seed) {
    DilatedKernel k{rank, size, dilation, in_channels, out_channels, {}, {}};
    const std::size_t taps = rank == 1 ? size : size * size;
    const double fan_in = static_cast<double>(taps * in_channels);
    const double fan_out = static_cast<double>(taps * out_channels);
    const double bound = std::sqrt(6.0 / (fan_in + fan_out));
    SplitMix64 rng(seed);
    k.weights.resize(taps * in_channels * out_channels);
    for (double& w : k.weights) {
        w = (2.0 * rng.uniform01() - 1.0) * bound;
    }
    k.validate();
    return k;
}

FeatureSeq dilated_conv_1d(const FeatureSeq& in, const DilatedKernel& kernel, simd::Isa isa) {
    kernel.validate();
    if (kernel.rank != 1) {
        throw InputError("dilated_conv_1d: kernel rank is not 1");
    }
    if (kernel.in_channels != in.channels) {
        throw InputError("dilated_conv_1d: input has " + std::to_string(in.channels) +
                         " channels, kernel expects " + std::to_string(kernel.in_channels));
    }

    const auto axpy = simd::resolve_axpy(isa);
    const std::size_t cin = kernel.in_channels;
    const std::size_t cout = kernel.out_channels;
    const auto half = static_cast<std::ptrdiff_t>(kernel.size / 2);
    const auto rate = static_cast<std::ptrdiff_t>(kernel.dilation);
    const auto len = static_cast<std::ptrdiff_t>(in.length);

    FeatureSeq out(in.length, cout);
    for (std::ptrdiff_t p = 0; p < len; ++p) {
        double* dst = out.values.data() + p * static_cast<std::ptrdiff_t>(cout);
        if (!kernel.bias.empty()) {
            std::copy(kernel.bias.begin(), kernel.bias.end(), dst);
        }
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(kernel.size); ++i) {
            const std::ptrdiff_t s = p - rate * (i - half);
            if (s < 0 || s >= len) {
                continue;  // zero padding
            }
            const double* src = in.values.data() + s * static_cast<std::ptrdiff_t>(cin);
            const double* w = kernel.weights.data() + i * static_cast<std::ptrdiff_t>(cin * cout);
            for (std::size_t ci = 0; ci < cin; ++ci) {
                axpy(src[ci], w + ci * cout, dst, cout);
            }
        }
    }
    return out;
}

FeatureGrid dilated_conv_2d(const FeatureGrid& in, const DilatedKernel& kernel, simd::Isa isa) {
    kernel.validate();
    if (kernel.rank != 2) {
        throw InputError("dilated_conv_2d: kernel rank is not 2");
    }
    if (kernel.in_channels != in.channels) {
        throw InputError("dilated_conv_2d: input has " + std::to_string(in.channels) +
                         " channels, kernel expects " + std::to_string(kernel.in_channels));
    }

    const auto axpy = simd::resolve_axpy(isa);
    const std::size_t cin = kernel.in_channels;
    const std::size_t cout = kernel.out_channels;
    const auto k = static_cast<std::ptrdiff_t>(kernel.size);
    const auto half = k / 2;
    const auto rate = static_cast<std::ptrdiff_t>(kernel.dilation);
    const auto h = static_cast<std::ptrdiff_t>(in.height);
    const auto wdt = static_cast<std::ptrdiff_t>(in.width);

    FeatureGrid out(in.height, in.width, cout);
    for (std::ptrdiff_t py = 0; py < h; ++py) {
        for (std::ptrdiff_t px = 0; px < wdt; ++px) {
            double* dst = &out.at(static_cast<std::size_t>(py), static_cast<std::size_t>(px), 0);
            if (!kernel.bias.empty()) {
                std::copy(kernel.bias.begin(), kernel.bias.end(), dst);
            }
            for (std::ptrdiff_t iy = 0; iy < k; ++iy) {
                const std::ptrdiff_t sy = py - rate * (iy - half);
                if (sy < 0 || sy >= h) {
                    continue;
                }
                for (std::ptrdiff_t ix = 0; ix < k; ++ix) {
                    const std::ptrdiff_t sx = px - rate * (ix - half);
                    if (sx < 0 || sx >= wdt) {
                        continue;
                    }
                    const double* src = in.values.data() + (sy * wdt + sx) * static_cast<std::ptrdiff_t>(cin);
                    const double* w =
                        kernel.weights.data() + (iy * k + ix) * static_cast<std::ptrdiff_t>(cin * cout);
                    for (std::size_t ci = 0; ci < cin; ++ci) {
                        axpy(src[ci], w + ci * cout, dst, cout);
                    }
                }
            }
        }
    }
    return out;
}

std::size_t receptive_field(std::span<const LayerSpec> stack) {
    if (stack.empty()) {
        throw InputError("receptive_field: empty layer stack");
    }
    std::size_t rf = 1;
    for (const LayerSpec& layer : stack) {
        rf += (layer.kernel_size - 1) * layer.dilation;
    }
    return rf;
}

void DcpeConfig::validate() const {
    if (channels == 0) {
        throw InputError("dcpe: channel width must be >= 1");
    }
    if (text_layers.empty() || visual_layers.empty()) {
        throw InputError("dcpe: each branch needs at least one layer");
    }
    for (const auto* stack : {&text_layers, &visual_layers}) {
        for (const LayerSpec& l : *stack) {
            if (l.kernel_size == 0 || l.kernel_size % 2 == 0 || l.dilation == 0) {
                throw InputError("dcpe: layers need an odd kernel size and dilation >= 1");
            }
        }
    }
}

DcpeModel DcpeModel::seeded(const DcpeConfig& config, std::uint64_t seed) {
    config.validate();
    DcpeModel m;
    m.config = config;
    std::uint64_t layer_seed = mix64(seed);
    for (const LayerSpec& l : config.text_layers) {
        m.text_kernels.push_back(DilatedKernel::seeded(1, l.kernel_size, l.dilation,
                                                       config.channels, config.channels,
                                                       layer_seed));
        layer_seed = mix64(layer_seed + 1);
    }
    for (const LayerSpec& l : config.visual_layers) {
        m.visual_kernels.push_back(DilatedKernel::seeded(2, l.kernel_size, l.dilation,
                                                         config.channels, config.channels,
                                                         layer_seed));
        layer_seed = mix64(layer_seed + 1);
    }
    return m;
}

void DcpeModel::validate() const {
    config.validate();
    auto check = [&](const std::vector<LayerSpec>& specs, const std::vector<DilatedKernel>& ks,
                     std::size_t rank, const char* branch) {
        if (specs.size() != ks.size()) {
            throw InputError(std::string("dcpe: ") + branch + " branch has " +
                             std::to_string(ks.size()) + " kernels for " +
                             std::to_string(specs.size()) + " layers");
        }
        for (std::size_t i = 0; i < ks.size(); ++i) {
            ks[i].validate();
            if (ks[i].rank != rank || ks[i].size != specs[i].kernel_size ||
                ks[i].dilation != specs[i].dilation || ks[i].in_channels != config.channels ||
                ks[i].out_channels != config.channels) {
                throw InputError(std::string("dcpe: ") + branch + " kernel " + std::to_string(i) +
                                 " does not match the config");
            }
        }
    };
    check(config.text_layers, text_kernels, 1, "text");
    check(config.visual_layers, visual_kernels, 2, "visual");
}

FeatureSeq dcpe_forward(const FeatureSeq& text, const FeatureGrid& visual, const DcpeModel& model,
                        simd::Isa isa) {
    model.validate();
    const std::size_t c = model.config.channels;
    if (text.channels != c || visual.channels != c) {
        throw InputError("dcpe: inputs must have " + std::to_string(c) + " channels");
    }

    FeatureSeq t = text;
    for (const DilatedKernel& k : model.text_kernels) {
        t = dilated_conv_1d(t, k, isa);
    }
    FeatureGrid v = visual;
    for (const DilatedKernel& k : model.visual_kernels) {
        v = dilated_conv_2d(v, k, isa);
    }

    std::vector<double> joined;
    joined.reserve(t.values.size() + v.values.size());
    joined.insert(joined.end(), t.values.begin(), t.values.end());
    joined.insert(joined.end(), v.values.begin(), v.values.end());
    return FeatureSeq(t.length + v.height * v.width, c, std::move(joined));
}

}  // namespace xyorder
