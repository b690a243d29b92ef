#pragma once

// JSON tensor format for the dcpe subcommand.
//
// Input:
//   { "channels": C,
//     "text":   [[c0, c1, ...], ...],             L rows of C values
//     "visual": [[[c0, ...], ...], ...],          H rows of W cells of C values
//     "text_layers":   [[k, l], ...],             optional, default [[3,1],[3,2]]
//     "visual_layers": [[k, l], ...],             optional, default [[3,1],[3,2]]
//     "seed": N,                                  optional weight seed, default 0
//     "text_weights":   [[w...], ...],            optional, one flat array per layer
//     "visual_weights": [[w...], ...] }           optional, same
//
// Output:
//   { "text_length": L, "visual_length": H*W, "channels": C, "values": [[...], ...] }

#include <string>
#include <string_view>

#include "xyorder/dcpe.hpp"

namespace xyorder::cli {

struct DcpeRequest {
    FeatureSeq text;
    FeatureGrid visual;
    DcpeModel model;
};

/// Throws InputError on malformed or inconsistent tensors.
DcpeRequest parse_dcpe_request(std::string_view text, const std::string& origin);

std::string dcpe_output_json(const FeatureSeq& encoded, std::size_t text_length);

}  // namespace xyorder::cli
