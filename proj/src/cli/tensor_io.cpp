#include "xyorder/cli/tensor_io.hpp"

#include "json.hpp"
#include "xyorder/geometry.hpp"

namespace xyorder::cli {

using nlohmann::json;

namespace {

std::vector<LayerSpec> parse_layers(const json& root, const char* key,
                                    std::vector<LayerSpec> fallback, const std::string& origin) {
    auto it = root.find(key);
    if (it == root.end()) {
        return fallback;
    }
    std::vector<LayerSpec> layers;
    if (!it->is_array()) {
        throw InputError(origin + ": \"" + key + "\" must be an array of [k, l] pairs");
    }
    for (const json& pair : *it) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned()) {
            throw InputError(origin + ": \"" + key + "\" entries must be [k, l] pairs");
        }
        layers.push_back({pair[0].get<std::size_t>(), pair[1].get<std::size_t>()});
    }
    return layers;
}

std::vector<double> flat_row(const json& row, std::size_t channels, const std::string& where) {
    if (!row.is_array() || row.size() != channels) {
        throw InputError(where + ": expected " + std::to_string(channels) + " channel values");
    }
    std::vector<double> out;
    out.reserve(channels);
    for (const json& v : row) {
        if (!v.is_number()) {
            throw InputError(where + ": non-numeric value");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<DilatedKernel> explicit_kernels(const json& root, const char* key, std::size_t rank,
                                            const std::vector<LayerSpec>& layers,
                                            std::size_t channels, const std::string& origin) {
    const json& arr = root.at(key);
    if (!arr.is_array() || arr.size() != layers.size()) {
        throw InputError(origin + ": \"" + key + "\" needs one weight array per layer");
    }
    std::vector<DilatedKernel> ks;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (!arr[i].is_array()) {
            throw InputError(origin + ": \"" + key + "\" entries must be arrays");
        }
        std::vector<double> w;
        for (const json& v : arr[i]) {
            if (!v.is_number()) {
                throw InputError(origin + ": non-numeric weight in \"" + key + "\"");
            }
            w.push_back(v.get<double>());
        }
        ks.push_back(rank == 1 ? DilatedKernel::conv1d(layers[i].kernel_size, layers[i].dilation,
                                                       channels, channels, std::move(w))
                               : DilatedKernel::conv2d(layers[i].kernel_size, layers[i].dilation,
                                                       channels, channels, std::move(w)));
    }
    return ks;
}

}  // namespace

DcpeRequest parse_dcpe_request(std::string_view text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    if (!root.is_object()) {
        throw InputError(origin + ": top level must be a JSON object");
    }
    auto c_it = root.find("channels");
    if (c_it == root.end() || !c_it->is_number_unsigned() || c_it->get<std::size_t>() == 0) {
        throw InputError(origin + ": \"channels\" must be a positive integer");
    }
    const std::size_t channels = c_it->get<std::size_t>();

    auto t_it = root.find("text");
    if (t_it == root.end() || !t_it->is_array() || t_it->empty()) {
        throw InputError(origin + ": \"text\" must be a non-empty array of rows");
    }
    std::vector<double> tv;
    for (std::size_t p = 0; p < t_it->size(); ++p) {
        auto row = flat_row((*t_it)[p], channels, origin + ": text row " + std::to_string(p));
        tv.insert(tv.end(), row.begin(), row.end());
    }

    auto v_it = root.find("visual");
    if (v_it == root.end() || !v_it->is_array() || v_it->empty() || !(*v_it)[0].is_array() ||
        (*v_it)[0].empty()) {
        throw InputError(origin + ": \"visual\" must be a non-empty H x W x C array");
    }
    const std::size_t height = v_it->size();
    const std::size_t width = (*v_it)[0].size();
    std::vector<double> vv;
    for (std::size_t y = 0; y < height; ++y) {
        const json& row = (*v_it)[y];
        if (!row.is_array() || row.size() != width) {
            throw InputError(origin + ": visual rows must all have " + std::to_string(width) +
                             " cells");
        }
        for (std::size_t x = 0; x < width; ++x) {
            auto cell = flat_row(row[x], channels,
                                 origin + ": visual cell (" + std::to_string(y) + "," +
                                     std::to_string(x) + ")");
            vv.insert(vv.end(), cell.begin(), cell.end());
        }
    }

    DcpeConfig cfg;
    cfg.channels = channels;
    cfg.text_layers = parse_layers(root, "text_layers", cfg.text_layers, origin);
    cfg.visual_layers = parse_layers(root, "visual_layers", cfg.visual_layers, origin);
    cfg.validate();

    std::uint64_t seed = 0;
    if (auto s = root.find("seed"); s != root.end()) {
        if (!s->is_number_unsigned()) {
            throw InputError(origin + ": \"seed\" must be a non-negative integer");
        }
        seed = s->get<std::uint64_t>();
    }
    DcpeModel model = DcpeModel::seeded(cfg, seed);
    if (root.contains("text_weights")) {
        model.text_kernels = explicit_kernels(root, "text_weights", 1, cfg.text_layers, channels,
                                              origin);
    }
    if (root.contains("visual_weights")) {
        model.visual_kernels = explicit_kernels(root, "visual_weights", 2, cfg.visual_layers,
                                                channels, origin);
    }
    model.validate();

    return DcpeRequest{FeatureSeq(t_it->size(), channels, std::move(tv)),
                       FeatureGrid(height, width, channels, std::move(vv)), std::move(model)};
}

std::string dcpe_output_json(const FeatureSeq& encoded, std::size_t text_length) {
    json rows = json::array();
    for (std::size_t p = 0; p < encoded.length; ++p) {
        auto r = encoded.row(p);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    json root = {{"text_length", text_length},
                 {"visual_length", encoded.length - text_length},
                 {"channels", encoded.channels},
                 {"values", rows}};
    return root.dump() + "\n";
}

}  // namespace xyorder::cli
