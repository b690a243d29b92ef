#pragma once

#include "support/random_docs.hpp"

namespace xyorder::testing {

/// Seven boxes: one spanning the top, then three column groups {2}, {3,4,5,6},
/// {7}, where 3 sits above 4, 5 and 6, which stand side by side.
inline Document seven_box_layout() {
    return make_doc({make_box(0, 0, 100, 10, 0, "1"), make_box(0, 20, 20, 60, 1, "2"),
                     make_box(30, 20, 70, 28, 2, "3"), make_box(30, 32, 40, 60, 3, "4"),
                     make_box(45, 32, 55, 60, 4, "5"), make_box(60, 32, 70, 60, 5, "6"),
                     make_box(80, 20, 100, 60, 6, "7")},
                    100, 60, "seven-box");
}

/// rows x cols grid of w x h boxes separated by `gap`, listed row by row.
inline Document grid_document(std::size_t rows, std::size_t cols, double w, double h, double gap) {
    std::vector<TokenBox> boxes;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double x = 50.0 + static_cast<double>(c) * (w + gap);
            const double y = 50.0 + static_cast<double>(r) * (h + gap);
            boxes.push_back(make_box(x, y, x + w, y + h, 0));
        }
    }
    return make_doc(std::move(boxes), 1000, 1000, "grid");
}

}  // namespace xyorder::testing
