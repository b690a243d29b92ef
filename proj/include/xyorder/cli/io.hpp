#pragma once

// File formats.
//
// boxes-json (canonical input):
//   { "id": str, "width": num, "height": num,
//     "tokens": [ { "text": str, "box": [x1, y1, x2, y2] }, ... ] }
//
// funsd-annotation: { "form": [ { "words": [ { "text": str, "box": [...] } ] } ] }
//   Words are flattened in file order. The page extent is taken from the
//   largest box corner and the id from the file name stem.
//
// order output:
//   { "id": str, "strategy": str, "seed": int|null, "order": [int],
//     "tokens": [ { "source_index": int, "text": str, "box": [...] } ] }

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xyorder/geometry.hpp"
#include "xyorder/xycut.hpp"

namespace xyorder::cli {

enum class InputFormat { BoxesJson, FunsdAnnotation };

InputFormat parse_format(std::string_view name);

/// Parses one document from text. `origin` names the source in error messages
/// and provides the id for FUNSD files.
Document parse_document(std::string_view text, InputFormat format, const std::string& origin);

/// Reads and parses a file. Throws InputError on I/O or format problems.
std::vector<Document> ingest(const std::filesystem::path& path, InputFormat format);

/// Serializes a document as boxes-json (token sequence order).
std::string to_boxes_json(const Document& doc);

/// Order output file body. `order` holds source indices of `doc`'s tokens.
std::string to_order_json(const Document& doc, const ReadingOrder& order,
                          std::string_view strategy, std::optional<std::uint64_t> seed);

/// Reads the "order" array of an order output file (or any JSON object with
/// an integer "order" array).
ReadingOrder parse_reference_order(std::string_view text, const std::string& origin);
ReadingOrder read_reference_order(const std::filesystem::path& path);

/// Nested JSON rendering of the tree rooted at node 0.
std::string tree_to_json(const XYTree& tree);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace xyorder::cli
