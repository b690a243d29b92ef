#pragma once

// Baseline sort-based orderings keyed on each box's top-left corner. Ties are
// broken by source_index so the result never depends on the token sequence.

#include "xyorder/augment.hpp"
#include "xyorder/geometry.hpp"

namespace xyorder {

/// Top-to-bottom, then left-to-right: sort by (y1, x1, source_index).
ReadingOrder order_yx(const Document& doc);

/// Column-major: sort by (x1, y1, source_index).
ReadingOrder order_xy(const Document& doc);

/// Diagonal sweep: sort by (x1 + y1, source_index).
ReadingOrder order_sum(const Document& doc);

/// order_yx over shift_boxes(doc). Indexes the original tokens.
ReadingOrder order_aug_yx(const Document& doc, const AugmentParams& params, SplitMix64& rng);
ReadingOrder order_aug_yx(const Document& doc, const AugmentParams& params);

}  // namespace xyorder
