#include "xyorder/heuristics.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace xyorder {

namespace {

template <typename Key>
ReadingOrder sort_by(const Document& doc, Key key) {
    std::vector<const TokenBox*> refs;
    refs.reserve(doc.size());
    for (const TokenBox& t : doc.tokens) {
        refs.push_back(&t);
    }
    std::sort(refs.begin(), refs.end(), [&](const TokenBox* a, const TokenBox* b) {
        return std::tuple_cat(key(*a), std::tie(a->source_index)) <
               std::tuple_cat(key(*b), std::tie(b->source_index));
    });
    ReadingOrder ord;
    ord.order.reserve(refs.size());
    for (const TokenBox* t : refs) {
        ord.order.push_back(t->source_index);
    }
    return ord;
}

}  // namespace

ReadingOrder order_yx(const Document& doc) {
    return sort_by(doc, [](const TokenBox& b) { return std::make_tuple(b.y1, b.x1); });
}

ReadingOrder order_xy(const Document& doc) {
    return sort_by(doc, [](const TokenBox& b) { return std::make_tuple(b.x1, b.y1); });
}

ReadingOrder order_sum(const Document& doc) {
    return sort_by(doc, [](const TokenBox& b) { return std::make_tuple(b.x1 + b.y1); });
}

ReadingOrder order_aug_yx(const Document& doc, const AugmentParams& params, SplitMix64& rng) {
    return order_yx(shift_boxes(doc, params, rng));
}

ReadingOrder order_aug_yx(const Document& doc, const AugmentParams& params) {
    SplitMix64 rng(params.seed);
    return order_aug_yx(doc, params, rng);
}

}  // namespace xyorder
