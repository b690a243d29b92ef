#include "xyorder/cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace xyorder::cli {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

InputFormat parse_format(std::string_view name) {
    if (name == "boxes-json") {
        return InputFormat::BoxesJson;
    }
    if (name == "funsd-annotation") {
        return InputFormat::FunsdAnnotation;
    }
    throw InputError("unknown input format '" + std::string(name) + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw InputError("write failed: " + path.string());
    }
}

namespace {

json parse_json(std::string_view text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
}

TokenBox parse_token(const json& j, std::size_t index, const std::string& origin) {
    const std::string where = origin + ": token " + std::to_string(index);
    if (!j.is_object()) {
        throw InputError(where + ": expected an object");
    }
    TokenBox t;
    t.source_index = index;
    if (auto it = j.find("text"); it != j.end()) {
        if (!it->is_string()) {
            throw InputError(where + ": \"text\" must be a string");
        }
        t.text = it->get<std::string>();
    }
    auto box = j.find("box");
    if (box == j.end() || !box->is_array() || box->size() != 4) {
        throw InputError(where + ": \"box\" must be an array of four numbers");
    }
    double c[4];
    for (std::size_t k = 0; k < 4; ++k) {
        if (!(*box)[k].is_number()) {
            throw InputError(where + ": \"box\" must be an array of four numbers");
        }
        c[k] = (*box)[k].get<double>();
    }
    t.x1 = c[0];
    t.y1 = c[1];
    t.x2 = c[2];
    t.y2 = c[3];
    try {
        validate_box(t, index);
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
    return t;
}

double get_number(const json& j, const char* key, const std::string& origin) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number()) {
        throw InputError(origin + ": missing numeric \"" + key + "\"");
    }
    return it->get<double>();
}

}  // namespace

Document parse_document(std::string_view text, InputFormat format, const std::string& origin) {
    const json root = parse_json(text, origin);
    if (!root.is_object()) {
        throw InputError(origin + ": top level must be a JSON object");
    }

    Document doc;
    if (format == InputFormat::BoxesJson) {
        auto id = root.find("id");
        if (id == root.end() || !id->is_string()) {
            throw InputError(origin + ": missing string \"id\"");
        }
        doc.id = id->get<std::string>();
        doc.width = get_number(root, "width", origin);
        doc.height = get_number(root, "height", origin);
        auto tokens = root.find("tokens");
        if (tokens == root.end() || !tokens->is_array()) {
            throw InputError(origin + ": missing \"tokens\" array");
        }
        for (const json& t : *tokens) {
            doc.tokens.push_back(parse_token(t, doc.tokens.size(), origin));
        }
    } else {
        doc.id = std::filesystem::path(origin).stem().string();
        auto form = root.find("form");
        if (form == root.end() || !form->is_array()) {
            throw InputError(origin + ": missing \"form\" array");
        }
        for (const json& entry : *form) {
            auto words = entry.find("words");
            if (words == entry.end()) {
                continue;
            }
            if (!words->is_array()) {
                throw InputError(origin + ": \"words\" must be an array");
            }
            for (const json& w : *words) {
                doc.tokens.push_back(parse_token(w, doc.tokens.size(), origin));
            }
        }
        double w = 1.0;
        double h = 1.0;
        for (const TokenBox& t : doc.tokens) {
            w = std::max(w, t.x2);
            h = std::max(h, t.y2);
        }
        doc.width = w;
        doc.height = h;
    }

    if (doc.tokens.empty()) {
        throw InputError(origin + ": empty token list");
    }
    try {
        validate(doc);
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
    return doc;
}

std::vector<Document> ingest(const std::filesystem::path& path, InputFormat format) {
    std::vector<Document> docs;
    docs.push_back(parse_document(read_file(path), format, path.string()));
    return docs;
}

namespace {

ordered box_json(const TokenBox& t) { return ordered::array({t.x1, t.y1, t.x2, t.y2}); }

}  // namespace

std::string to_boxes_json(const Document& doc) {
    ordered tokens = ordered::array();
    for (const TokenBox& t : doc.tokens) {
        tokens.push_back({{"text", t.text}, {"box", box_json(t)}});
    }
    ordered root = {{"id", doc.id}, {"width", doc.width}, {"height", doc.height}, {"tokens", tokens}};
    return root.dump(2) + "\n";
}

std::string to_order_json(const Document& doc, const ReadingOrder& order,
                          std::string_view strategy, std::optional<std::uint64_t> seed) {
    std::vector<const TokenBox*> by_source(doc.size(), nullptr);
    for (const TokenBox& t : doc.tokens) {
        if (t.source_index < by_source.size()) {
            by_source[t.source_index] = &t;
        }
    }
    if (std::find(by_source.begin(), by_source.end(), nullptr) != by_source.end()) {
        throw InputError("document '" + doc.id + "': source_index values are not 0..K-1");
    }
    require_permutation(order, doc.size(), "to_order_json");

    ordered tokens = ordered::array();
    for (std::size_t src : order.order) {
        const TokenBox& t = *by_source[src];
        tokens.push_back({{"source_index", t.source_index}, {"text", t.text}, {"box", box_json(t)}});
    }
    ordered root;
    root["id"] = doc.id;
    root["strategy"] = std::string(strategy);
    root["seed"] = seed ? ordered(*seed) : ordered(nullptr);
    root["order"] = order.order;
    root["tokens"] = tokens;
    return root.dump(2) + "\n";
}

ReadingOrder parse_reference_order(std::string_view text, const std::string& origin) {
    const json root = parse_json(text, origin);
    auto it = root.is_object() ? root.find("order") : root.end();
    if (it == root.end() || !it->is_array()) {
        throw InputError(origin + ": missing \"order\" array");
    }
    ReadingOrder ord;
    for (const json& v : *it) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            throw InputError(origin + ": \"order\" entries must be non-negative integers");
        }
        ord.order.push_back(v.get<std::size_t>());
    }
    if (!is_permutation(ord, ord.size())) {
        throw InputError(origin + ": \"order\" is not a permutation");
    }
    return ord;
}

ReadingOrder read_reference_order(const std::filesystem::path& path) {
    return parse_reference_order(read_file(path), path.string());
}

namespace {

ordered node_json(const XYTree& tree, std::size_t id) {
    const XYNode& n = tree.node(id);
    ordered j;
    j["kind"] = node_kind_name(n.kind);
    if (n.kind == NodeKind::Leaf) {
        j["token"] = *n.token;
        return j;
    }
    j["axis"] = n.axis ? ordered(axis_name(*n.axis)) : ordered(nullptr);
    j["members"] = n.members;
    ordered children = ordered::array();
    for (std::size_t c : n.children) {
        children.push_back(node_json(tree, c));
    }
    j["children"] = std::move(children);
    return j;
}

}  // namespace

std::string tree_to_json(const XYTree& tree) {
    if (tree.empty()) {
        return "null\n";
    }
    return node_json(tree, tree.root()).dump(2) + "\n";
}

}  // namespace xyorder::cli
