#include "xyorder/xycut.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

namespace xyorder {

const char* node_kind_name(NodeKind k) noexcept {
    switch (k) {
        case NodeKind::Root: return "root";
        case NodeKind::Division: return "division";
        case NodeKind::Fallback: return "fallback";
        case NodeKind::Leaf: return "leaf";
    }
    return "?";
}

XYTree::XYTree(std::vector<std::size_t> members) {
    XYNode root;
    root.kind = NodeKind::Root;
    root.members = std::move(members);
    nodes_.push_back(std::move(root));
}

std::size_t XYTree::add_child(std::size_t parent, XYNode child) {
    if (parent >= nodes_.size()) {
        throw InvariantViolation("XYTree::add_child: no such parent node");
    }
    const std::size_t id = nodes_.size();
    nodes_.push_back(std::move(child));
    nodes_[parent].children.push_back(id);
    return id;
}

std::size_t XYTree::leaf_count() const {
    return static_cast<std::size_t>(std::count_if(
        nodes_.begin(), nodes_.end(), [](const XYNode& n) { return n.kind == NodeKind::Leaf; }));
}

std::size_t XYTree::depth() const {
    if (nodes_.empty()) {
        return 0;
    }
    std::size_t best = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 1}};
    while (!stack.empty()) {
        auto [id, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        for (std::size_t c : nodes_[id].children) {
            stack.emplace_back(c, d + 1);
        }
    }
    return best;
}

void XYTree::validate(std::size_t token_count) const {
    auto fail = [](const std::string& msg) { throw InvariantViolation("XYTree: " + msg); };
    if (nodes_.empty()) {
        fail("no root");
    }
    if (nodes_[0].kind != NodeKind::Root) {
        fail("node 0 is not the root");
    }

    std::vector<bool> visited(nodes_.size(), false);
    std::vector<bool> leaf_seen(token_count, false);
    std::size_t leaves = 0;

    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        const std::size_t id = stack.back();
        stack.pop_back();
        if (visited[id]) {
            fail("node " + std::to_string(id) + " reachable twice");
        }
        visited[id] = true;
        const XYNode& n = nodes_[id];
        const std::string where = "node " + std::to_string(id) + ": ";

        if (n.kind == NodeKind::Root && id != 0) {
            fail(where + "second root");
        }
        if (n.kind == NodeKind::Leaf) {
            if (!n.children.empty() || !n.token) {
                fail(where + "leaf must carry a token and no children");
            }
            if (*n.token >= token_count || leaf_seen[*n.token]) {
                fail(where + "leaf token " + std::to_string(*n.token) +
                     " out of range or duplicated");
            }
            leaf_seen[*n.token] = true;
            ++leaves;
            if (n.members.size() != 1 || n.members[0] != *n.token) {
                fail(where + "leaf members must be its own token");
            }
            continue;
        }

        if (n.token) {
            fail(where + "only leaves carry tokens");
        }
        if (n.children.empty()) {
            fail(where + "inner node without children");
        }
        const bool divides = n.kind == NodeKind::Division || (n.kind == NodeKind::Root && n.axis);
        if (n.kind == NodeKind::Division && !n.axis) {
            fail(where + "division without axis");
        }
        if (divides && n.children.size() < 2) {
            fail(where + "division with fewer than two children");
        }
        if (n.kind == NodeKind::Fallback && n.children.size() < 2) {
            fail(where + "fallback group with fewer than two children");
        }

        std::vector<std::size_t> joined;
        for (std::size_t c : n.children) {
            if (c >= nodes_.size() || c == 0) {
                fail(where + "bad child id");
            }
            const XYNode& child = nodes_[c];
            if (!divides && child.kind != NodeKind::Leaf) {
                fail(where + "non-dividing node with a non-leaf child");
            }
            if (child.kind == NodeKind::Division && child.axis && n.axis &&
                *child.axis == *n.axis) {
                fail(where + "division axes do not alternate");
            }
            joined.insert(joined.end(), child.members.begin(), child.members.end());
            stack.push_back(c);
        }
        if (joined != n.members) {
            fail(where + "children do not partition the node's members");
        }
    }

    if (leaves != token_count) {
        fail("expected " + std::to_string(token_count) + " leaves, found " +
             std::to_string(leaves));
    }
    if (std::find(visited.begin(), visited.end(), false) != visited.end()) {
        fail("unreachable nodes");
    }
}

namespace {

// Interval of one box along the division axis, with its position in the
// caller's box array.
struct Span1D {
    double start;
    double end;
    std::size_t source_index;
    std::uint32_t pos;
};

// Groups `positions` into maximal runs of overlapping closed intervals, which
// are exactly the clusters separated by zero-coverage valleys.
std::vector<std::vector<std::uint32_t>> divide_positions(std::span<const TokenBox> boxes,
                                                         std::span<const std::uint32_t> positions,
                                                         Axis axis) {
    std::vector<Span1D> spans;
    spans.reserve(positions.size());
    for (std::uint32_t p : positions) {
        const TokenBox& b = boxes[p];
        spans.push_back({interval_start(b, axis), interval_end(b, axis), b.source_index, p});
    }
    std::sort(spans.begin(), spans.end(), [](const Span1D& a, const Span1D& b) {
        if (a.start != b.start) {
            return a.start < b.start;
        }
        return a.source_index < b.source_index;
    });

    std::vector<std::vector<std::uint32_t>> clusters;
    double reach = 0.0;
    for (const Span1D& s : spans) {
        if (clusters.empty() || s.start > reach) {
            clusters.emplace_back();
            reach = s.end;
        } else {
            reach = std::max(reach, s.end);
        }
        clusters.back().push_back(s.pos);
    }
    return clusters;
}

std::vector<std::uint32_t> fallback_positions(std::span<const TokenBox> boxes,
                                              std::vector<std::uint32_t> positions) {
    std::sort(positions.begin(), positions.end(), [&](std::uint32_t a, std::uint32_t b) {
        const TokenBox& ba = boxes[a];
        const TokenBox& bb = boxes[b];
        if (ba.y1 != bb.y1) {
            return ba.y1 < bb.y1;
        }
        if (ba.x1 != bb.x1) {
            return ba.x1 < bb.x1;
        }
        return ba.source_index < bb.source_index;
    });
    return positions;
}

}  // namespace

namespace detail {

class TreeBuilder {
public:
    TreeBuilder(std::span<const TokenBox> boxes, XYTree& tree, std::vector<std::size_t>& order)
        : boxes_(boxes), tree_(tree), order_(order) {}

    // Fills node `id`, which covers `positions`, preferring `preferred` for
    // its first division attempt. Appends the node's reading order to order_.
    void expand(std::size_t id, const std::vector<std::uint32_t>& positions, Axis preferred) {
        const std::size_t first = order_.size();

        if (positions.size() == 1) {
            // Only the root can reach here with a single box.
            add_leaf(id, positions[0]);
        } else {
            Axis used = preferred;
            auto clusters = divide_positions(boxes_, positions, used);
            if (clusters.size() < 2) {
                used = other(preferred);
                clusters = divide_positions(boxes_, positions, used);
            }

            XYNode& self = tree_.nodes_[id];
            if (clusters.size() < 2) {
                if (self.kind != NodeKind::Root) {
                    self.kind = NodeKind::Fallback;
                }
                for (std::uint32_t p : fallback_positions(boxes_, positions)) {
                    add_leaf(id, p);
                }
            } else {
                self.axis = used;
                for (const auto& cluster : clusters) {
                    if (cluster.size() == 1) {
                        add_leaf(id, cluster[0]);
                        continue;
                    }
                    XYNode div;
                    div.kind = NodeKind::Division;
                    const std::size_t child = tree_.add_child(id, std::move(div));
                    expand(child, cluster, other(used));
                }
            }
        }

        tree_.nodes_[id].members.assign(order_.begin() + static_cast<std::ptrdiff_t>(first),
                                        order_.end());
    }

private:
    void add_leaf(std::size_t parent, std::uint32_t pos) {
        XYNode leaf;
        leaf.kind = NodeKind::Leaf;
        leaf.token = boxes_[pos].source_index;
        leaf.members = {boxes_[pos].source_index};
        tree_.add_child(parent, std::move(leaf));
        order_.push_back(boxes_[pos].source_index);
    }

    std::span<const TokenBox> boxes_;
    XYTree& tree_;
    std::vector<std::size_t>& order_;
};

}  // namespace detail

std::vector<std::vector<TokenBox>> divide(std::span<const TokenBox> boxes, Axis axis) {
    if (boxes.empty()) {
        return {};
    }
    std::vector<std::uint32_t> positions(boxes.size());
    std::iota(positions.begin(), positions.end(), std::uint32_t{0});
    std::vector<std::vector<TokenBox>> out;
    for (const auto& cluster : divide_positions(boxes, positions, axis)) {
        auto& dst = out.emplace_back();
        dst.reserve(cluster.size());
        for (std::uint32_t p : cluster) {
            dst.push_back(boxes[p]);
        }
    }
    return out;
}

ReadingOrder fallback(std::span<const TokenBox> boxes) {
    std::vector<std::uint32_t> positions(boxes.size());
    std::iota(positions.begin(), positions.end(), std::uint32_t{0});
    ReadingOrder ord;
    for (std::uint32_t p : fallback_positions(boxes, std::move(positions))) {
        ord.order.push_back(p);
    }
    return ord;
}

XYCutResult xy_cut(const Document& doc) {
    if (doc.empty()) {
        throw InputError("empty document");
    }
    XYCutResult result;
    result.tree = XYTree(std::vector<std::size_t>{});
    result.order.order.reserve(doc.size());

    std::vector<std::uint32_t> positions(doc.size());
    std::iota(positions.begin(), positions.end(), std::uint32_t{0});

    detail::TreeBuilder builder(doc.tokens, result.tree, result.order.order);
    builder.expand(result.tree.root(), positions, Axis::Horizontal);
    return result;
}

ReadingOrder flatten(const XYTree& tree) {
    if (tree.empty()) {
        throw InvariantViolation("flatten: empty tree");
    }
    ReadingOrder ord;
    std::vector<std::size_t> stack{tree.root()};
    std::vector<bool> visited(tree.size(), false);
    while (!stack.empty()) {
        const std::size_t id = stack.back();
        stack.pop_back();
        if (id >= tree.size() || visited[id]) {
            throw InvariantViolation("flatten: malformed tree (cycle or bad node id)");
        }
        visited[id] = true;
        const XYNode& n = tree.node(id);
        if (n.kind == NodeKind::Leaf) {
            if (!n.token) {
                throw InvariantViolation("flatten: leaf without token");
            }
            ord.order.push_back(*n.token);
            continue;
        }
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    if (!is_permutation(ord, ord.size())) {
        throw InvariantViolation("flatten: leaf indices are not a permutation");
    }
    return ord;
}

}  // namespace xyorder
