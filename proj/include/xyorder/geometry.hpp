#pragma once

// Core coordinate types shared by every ordering strategy.
//
// Coordinates follow the image/OCR convention: origin at the top-left corner
// of the page, x grows to the right and y grows downward. "Top first" therefore
// means ascending y, "left first" ascending x.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace xyorder {

/// Raised for malformed user input (bad files, invalid boxes, bad parameters).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal postcondition fails (e.g. an order that is not a
/// permutation). Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct TokenBox {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;
    std::string text;
    std::size_t source_index = 0;

    double width() const noexcept { return x2 - x1; }
    double height() const noexcept { return y2 - y1; }

    friend bool operator==(const TokenBox&, const TokenBox&) = default;
};

struct Extent {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    friend bool operator==(const Extent&, const Extent&) = default;
};

struct Document {
    std::string id;
    double width = 1.0;
    double height = 1.0;
    std::vector<TokenBox> tokens;

    std::size_t size() const noexcept { return tokens.size(); }
    bool empty() const noexcept { return tokens.empty(); }

    friend bool operator==(const Document&, const Document&) = default;
};

/// order[rank] is the source_index of the token read at position `rank`.
struct ReadingOrder {
    std::vector<std::size_t> order;

    std::size_t size() const noexcept { return order.size(); }

    friend bool operator==(const ReadingOrder&, const ReadingOrder&) = default;
};

/// Checks x1 <= x2, y1 <= y2 and finiteness. Throws InputError naming `index`.
void validate_box(const TokenBox& box, std::size_t index);

/// Full document check: every box valid, source_index values exactly 0..K-1,
/// positive page extent, and every box inside the augmentation slack window
/// [-width, 2*width] x [-height, 2*height].
void validate(const Document& doc);

bool is_permutation(std::span<const std::size_t> order, std::size_t n);
bool is_permutation(const ReadingOrder& ord, std::size_t n);

/// Throws InvariantViolation unless `ord` is a permutation of 0..n-1.
void require_permutation(const ReadingOrder& ord, std::size_t n, const char* what);

/// Identity order 0..n-1.
ReadingOrder identity_order(std::size_t n);

/// inverse.order[ord.order[r]] = r.
ReadingOrder inverse(const ReadingOrder& ord);

/// Coordinate-wise min of (x1, y1) and max of (x2, y2) over all tokens.
Extent extent(const Document& doc);
Extent extent(std::span<const TokenBox> boxes);

/// Reorders the token sequence: position r of the result holds the token at
/// position ord.order[r] of `doc`. For documents in input order (tokens[i] has
/// source_index i, as produced by ingest) positions and source indices agree.
/// source_index fields are preserved.
Document apply_order(const Document& doc, const ReadingOrder& ord);

/// Reading order implied by the current token sequence (the source_index of
/// each token in turn).
ReadingOrder sequence_order(const Document& doc);

}  // namespace xyorder
