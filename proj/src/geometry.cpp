#include "xyorder/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace xyorder {

void validate_box(const TokenBox& box, std::size_t index) {
    if (!std::isfinite(box.x1) || !std::isfinite(box.y1) || !std::isfinite(box.x2) ||
        !std::isfinite(box.y2)) {
        throw InputError("token " + std::to_string(index) + ": non-finite coordinate");
    }
    if (box.x1 > box.x2) {
        throw InputError("token " + std::to_string(index) + ": x1 > x2");
    }
    if (box.y1 > box.y2) {
        throw InputError("token " + std::to_string(index) + ": y1 > y2");
    }
}

void validate(const Document& doc) {
    if (!(doc.width > 0.0) || !(doc.height > 0.0) || !std::isfinite(doc.width) ||
        !std::isfinite(doc.height)) {
        throw InputError("document '" + doc.id + "': page extent must be positive");
    }
    std::vector<bool> seen(doc.size(), false);
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const TokenBox& b = doc.tokens[i];
        validate_box(b, i);
        if (b.source_index >= doc.size() || seen[b.source_index]) {
            throw InputError("token " + std::to_string(i) + ": source_index " +
                             std::to_string(b.source_index) + " out of range or duplicated");
        }
        seen[b.source_index] = true;
        if (b.x1 < -doc.width || b.x2 > 2.0 * doc.width || b.y1 < -doc.height ||
            b.y2 > 2.0 * doc.height) {
            throw InputError("token " + std::to_string(i) + ": box lies outside the page window");
        }
    }
}

bool is_permutation(std::span<const std::size_t> order, std::size_t n) {
    if (order.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (std::size_t v : order) {
        if (v >= n || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

bool is_permutation(const ReadingOrder& ord, std::size_t n) {
    return is_permutation(std::span<const std::size_t>(ord.order), n);
}

void require_permutation(const ReadingOrder& ord, std::size_t n, const char* what) {
    if (!is_permutation(ord, n)) {
        throw InvariantViolation(std::string(what) + ": result is not a permutation of 0.." +
                                 std::to_string(n) + "-1");
    }
}

ReadingOrder identity_order(std::size_t n) {
    ReadingOrder ord;
    ord.order.resize(n);
    std::iota(ord.order.begin(), ord.order.end(), std::size_t{0});
    return ord;
}

ReadingOrder inverse(const ReadingOrder& ord) {
    if (!is_permutation(ord, ord.size())) {
        throw InputError("inverse: order is not a permutation");
    }
    ReadingOrder inv;
    inv.order.resize(ord.size());
    for (std::size_t r = 0; r < ord.size(); ++r) {
        inv.order[ord.order[r]] = r;
    }
    return inv;
}

Extent extent(std::span<const TokenBox> boxes) {
    if (boxes.empty()) {
        throw InputError("empty document");
    }
    Extent e{boxes[0].x1, boxes[0].y1, boxes[0].x2, boxes[0].y2};
    for (const TokenBox& b : boxes.subspan(1)) {
        e.x_min = std::min(e.x_min, b.x1);
        e.y_min = std::min(e.y_min, b.y1);
        e.x_max = std::max(e.x_max, b.x2);
        e.y_max = std::max(e.y_max, b.y2);
    }
    return e;
}

Extent extent(const Document& doc) { return extent(std::span<const TokenBox>(doc.tokens)); }

Document apply_order(const Document& doc, const ReadingOrder& ord) {
    if (ord.size() != doc.size()) {
        throw InputError("apply_order: order length " + std::to_string(ord.size()) +
                         " does not match token count " + std::to_string(doc.size()));
    }
    if (!is_permutation(ord, doc.size())) {
        throw InputError("apply_order: order is not a permutation");
    }
    Document out;
    out.id = doc.id;
    out.width = doc.width;
    out.height = doc.height;
    out.tokens.reserve(doc.size());
    for (std::size_t pos : ord.order) {
        out.tokens.push_back(doc.tokens[pos]);
    }
    return out;
}

ReadingOrder sequence_order(const Document& doc) {
    ReadingOrder ord;
    ord.order.reserve(doc.size());
    for (const TokenBox& t : doc.tokens) {
        ord.order.push_back(t.source_index);
    }
    return ord;
}

}  // namespace xyorder
