#pragma once

// Recursive XY Cut: divide a box set at projection-profile valleys, alternating
// between rows (horizontal projection) and columns (vertical projection), and
// read the resulting XY tree's leaves left to right.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xyorder/geometry.hpp"
#include "xyorder/projection.hpp"

namespace xyorder {

namespace detail {
class TreeBuilder;
}

enum class NodeKind {
    Root,      // the whole document; may also carry the first division's axis
    Division,  // split at valleys along `axis`, children in reading precedence
    Fallback,  // indivisible cluster, children are leaves in (y1, x1) order
    Leaf,      // a single token
};

const char* node_kind_name(NodeKind k) noexcept;

struct XYNode {
    NodeKind kind = NodeKind::Leaf;
    std::optional<Axis> axis;          // set for Division, and for a dividing Root
    std::optional<std::size_t> token;  // source_index, Leaf only
    std::vector<std::size_t> children; // node ids
    std::vector<std::size_t> members;  // source indices covered, in reading order

    friend bool operator==(const XYNode&, const XYNode&) = default;
};

/// Recursion trace of an XY Cut run. Node 0 is the root.
class XYTree {
public:
    XYTree() = default;

    /// Creates the root node covering `members`.
    explicit XYTree(std::vector<std::size_t> members);

    std::size_t root() const noexcept { return 0; }
    const XYNode& node(std::size_t id) const { return nodes_.at(id); }
    std::span<const XYNode> nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    bool empty() const noexcept { return nodes_.empty(); }

    /// Appends a node under `parent` and returns its id.
    std::size_t add_child(std::size_t parent, XYNode child);

    std::size_t leaf_count() const;
    std::size_t depth() const;

    /// Throws InvariantViolation if the tree breaks a structural invariant:
    /// leaves are exactly 0..k-1 once each, Division nodes have >= 2 children,
    /// children partition their parent's members, Division axes alternate.
    void validate(std::size_t token_count) const;

    friend bool operator==(const XYTree&, const XYTree&) = default;

private:
    friend class detail::TreeBuilder;

    std::vector<XYNode> nodes_;
};

/// Splits `boxes` at the valleys of their profile along `axis`. Clusters are
/// returned in reading precedence (ascending start coordinate); a single
/// cluster means there is no valley.
std::vector<std::vector<TokenBox>> divide(std::span<const TokenBox> boxes, Axis axis);

/// Local order for an indivisible cluster: positions into `boxes`, sorted by
/// (y1, x1, source_index).
ReadingOrder fallback(std::span<const TokenBox> boxes);

struct XYCutResult {
    ReadingOrder order;
    XYTree tree;
};

/// Plain XY Cut. Starts with the horizontal projection; a cluster that cannot
/// be divided along its preferred axis is retried once along the other axis
/// before it is closed out by `fallback`. The order holds source indices.
/// Throws InputError on an empty document.
XYCutResult xy_cut(const Document& doc);

/// Depth-first leaf traversal. Throws InvariantViolation on a malformed tree.
ReadingOrder flatten(const XYTree& tree);

}  // namespace xyorder
