#include <random>
#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "xyorder/heuristics.hpp"
#include "xyorder/xycut.hpp"

using namespace xyorder;
using xyorder::testing::make_box;
using xyorder::testing::make_doc;

namespace {

std::vector<std::size_t> sources(const std::vector<TokenBox>& boxes) {
    std::vector<std::size_t> out;
    for (const TokenBox& b : boxes) {
        out.push_back(b.source_index);
    }
    return out;
}

std::vector<std::size_t> leaf_tokens(const XYTree& tree, std::size_t id) {
    std::vector<std::size_t> out;
    for (std::size_t c : tree.node(id).children) {
        const XYNode& n = tree.node(c);
        if (n.kind == NodeKind::Leaf) {
            out.push_back(*n.token);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("divide splits at a valley, top first") {
    const std::vector<TokenBox> boxes{make_box(0, 20, 10, 30, 0), make_box(0, 0, 10, 10, 1)};
    const auto clusters = divide(boxes, Axis::Horizontal);
    REQUIRE(clusters.size() == 2);
    CHECK(sources(clusters[0]) == std::vector<std::size_t>{1});
    CHECK(sources(clusters[1]) == std::vector<std::size_t>{0});
}

TEST_CASE("divide keeps overlapping boxes together") {
    const std::vector<TokenBox> boxes{make_box(0, 0, 10, 10, 0), make_box(0, 5, 10, 30, 1)};
    CHECK(divide(boxes, Axis::Horizontal).size() == 1);
}

TEST_CASE("divide equals connected components of the overlap graph") {
    std::mt19937_64 rng(404);
    for (int round = 0; round < 300; ++round) {
        const Document d = testing::random_document(rng, 80);
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
            const auto clusters = divide(d.tokens, axis);
            std::set<std::set<std::size_t>> got;
            std::size_t total = 0;
            for (const auto& c : clusters) {
                const auto s = sources(c);
                got.insert({s.begin(), s.end()});
                total += c.size();
            }
            REQUIRE(total == d.size());
            CHECK(got == testing::overlap_components(d.tokens, axis));

            // Cluster count agrees with the valley count of the profile.
            CHECK(clusters.size() == valleys(profile(d.tokens, axis)).size() + 1);

            // Clusters come in ascending start coordinate.
            for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
                const auto a = axis == Axis::Horizontal ? extent(clusters[i]).y_max : extent(clusters[i]).x_max;
                const auto b = axis == Axis::Horizontal ? extent(clusters[i + 1]).y_min : extent(clusters[i + 1]).x_min;
                CHECK(a < b);
            }

            // Re-dividing a cluster on the same axis is a no-op.
            for (const auto& c : clusters) {
                CHECK(divide(c, axis).size() == 1);
            }
        }
    }
}

TEST_CASE("seven-box layout reads 1..7 with the expected tree") {
    const Document d = testing::seven_box_layout();
    const XYCutResult r = xy_cut(d);
    CHECK(r.order.order == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6});
    r.tree.validate(d.size());
    CHECK(flatten(r.tree) == r.order);

    const XYNode& root = r.tree.node(r.tree.root());
    REQUIRE(root.axis == Axis::Horizontal);
    REQUIRE(root.children.size() == 2);
    CHECK(r.tree.node(root.children[0]).token == 0u);

    const std::size_t cols_id = root.children[1];
    const XYNode& cols = r.tree.node(cols_id);
    CHECK(cols.kind == NodeKind::Division);
    CHECK(cols.axis == Axis::Vertical);
    CHECK(cols.members == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
    REQUIRE(cols.children.size() == 3);
    CHECK(r.tree.node(cols.children[0]).token == 1u);
    CHECK(r.tree.node(cols.children[2]).token == 6u);

    const XYNode& middle = r.tree.node(cols.children[1]);
    CHECK(middle.axis == Axis::Horizontal);
    CHECK(middle.members == std::vector<std::size_t>{2, 3, 4, 5});
    REQUIRE(middle.children.size() == 2);
    CHECK(r.tree.node(middle.children[0]).token == 2u);

    const std::size_t trio = middle.children[1];
    CHECK(r.tree.node(trio).axis == Axis::Vertical);
    CHECK(leaf_tokens(r.tree, trio) == std::vector<std::size_t>{3, 4, 5});
}

TEST_CASE("single box is one leaf") {
    const Document d = make_doc({make_box(3, 3, 9, 9, 0)});
    const XYCutResult r = xy_cut(d);
    CHECK(r.order.order == std::vector<std::size_t>{0});
    CHECK(r.tree.leaf_count() == 1);
    r.tree.validate(1);
}

TEST_CASE("stacked boxes read top first regardless of input order") {
    const Document d = make_doc({make_box(0, 50, 10, 60, 0), make_box(0, 0, 10, 10, 1)});
    CHECK(xy_cut(d).order.order == std::vector<std::size_t>{1, 0});
}

TEST_CASE("a cluster that only divides vertically is retried on the other axis") {
    // Two columns whose boxes overlap vertically: the first (horizontal)
    // attempt finds no valley, the vertical one does.
    const Document d = make_doc({make_box(60, 0, 90, 40, 0), make_box(0, 10, 30, 50, 1)});
    const XYCutResult r = xy_cut(d);
    CHECK(r.order.order == std::vector<std::size_t>{1, 0});
    CHECK(r.tree.node(0).axis == Axis::Vertical);
}

TEST_CASE("indivisible clusters fall back to (y1, x1) order") {
    // Pinwheel: every pair overlaps on at least one axis so no valley exists.
    const Document d = make_doc({make_box(0, 0, 60, 20, 0), make_box(70, 0, 90, 60, 1),
                                 make_box(30, 70, 90, 90, 2), make_box(0, 30, 20, 90, 3),
                                 make_box(30, 30, 60, 60, 4)});
    CHECK(divide(d.tokens, Axis::Horizontal).size() == 1);
    CHECK(divide(d.tokens, Axis::Vertical).size() == 1);
    const XYCutResult r = xy_cut(d);
    CHECK(r.order == order_yx(d));
    CHECK(r.tree.node(0).axis == std::nullopt);
    r.tree.validate(d.size());
}

TEST_CASE("fallback sorts by y1, then x1, then source_index") {
    const std::vector<TokenBox> same_row{make_box(20, 0, 40, 10, 0), make_box(0, 0, 40, 10, 1)};
    CHECK(fallback(same_row).order == std::vector<std::size_t>{1, 0});

    const std::vector<TokenBox> identical{make_box(0, 0, 5, 5, 0), make_box(0, 0, 5, 5, 1),
                                          make_box(0, 0, 5, 5, 2)};
    CHECK(fallback(identical).order == std::vector<std::size_t>{0, 1, 2});

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> c(0, 20);
    for (int round = 0; round < 100; ++round) {
        std::vector<TokenBox> boxes;
        for (std::size_t i = 0; i < 10; ++i) {
            const int x = c(rng);
            const int y = c(rng);
            boxes.push_back(make_box(x, y, 40 + x, 40 + y, i));  // all share [20,40]^2
        }
        const Document d = make_doc(boxes);
        const auto want = testing::reference_sort(
            d, [](const TokenBox& b) { return std::pair{b.y1, b.x1}; });
        CHECK(fallback(d.tokens) == want);
    }
}

TEST_CASE("xy_cut rejects an empty document") {
    CHECK_THROWS_AS(xy_cut(Document{}), InputError);
}

TEST_CASE("flatten reads leaves depth first and rejects malformed trees") {
    XYTree single(std::vector<std::size_t>{0});
    XYNode leaf;
    leaf.kind = NodeKind::Leaf;
    leaf.token = 0;
    leaf.members = {0};
    single.add_child(0, leaf);
    CHECK(flatten(single).order == std::vector<std::size_t>{0});

    XYTree dup(std::vector<std::size_t>{0, 0});
    dup.add_child(0, leaf);
    dup.add_child(0, leaf);
    CHECK_THROWS_AS(flatten(dup), InvariantViolation);

    XYTree gap(std::vector<std::size_t>{0, 2});
    XYNode two = leaf;
    two.token = 2;
    two.members = {2};
    gap.add_child(0, leaf);
    gap.add_child(0, two);
    CHECK_THROWS_AS(flatten(gap), InvariantViolation);
    CHECK_THROWS_AS(gap.validate(2), InvariantViolation);
}

TEST_CASE("randomly built trees always flatten to a permutation") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 200; ++round) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
        std::vector<std::size_t> tokens(k);
        std::iota(tokens.begin(), tokens.end(), std::size_t{0});
        std::shuffle(tokens.begin(), tokens.end(), rng);

        // Attach leaves under randomly created inner nodes.
        XYTree tree(tokens);
        std::vector<std::size_t> inner{0};
        for (std::size_t t : tokens) {
            if (std::bernoulli_distribution(0.3)(rng)) {
                XYNode div;
                div.kind = NodeKind::Division;
                div.axis = Axis::Vertical;
                const std::size_t parent = inner[std::uniform_int_distribution<std::size_t>(0, inner.size() - 1)(rng)];
                inner.push_back(tree.add_child(parent, div));
            }
            XYNode leaf;
            leaf.kind = NodeKind::Leaf;
            leaf.token = t;
            leaf.members = {t};
            tree.add_child(inner[std::uniform_int_distribution<std::size_t>(0, inner.size() - 1)(rng)], leaf);
        }
        const ReadingOrder ord = flatten(tree);
        CHECK(is_permutation(ord, k));
    }
}

TEST_CASE("xy_cut invariants on random documents") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 300; ++round) {
        const Document d = testing::random_document(rng, 200);
        const XYCutResult r = xy_cut(d);
        REQUIRE(is_permutation(r.order, d.size()));
        r.tree.validate(d.size());
        CHECK(flatten(r.tree) == r.order);
        CHECK(r.tree.depth() <= 2 * d.size() + 1);

        // Input-order invariance.
        CHECK(xy_cut(testing::shuffled(d, rng)).order == r.order);

        // Translation and uniform scaling (exact on integer coordinates).
        Document moved = d;
        Document scaled = d;
        moved.width = scaled.width = 1e6;
        moved.height = scaled.height = 1e6;
        for (TokenBox& b : moved.tokens) {
            b.x1 += 37; b.x2 += 37; b.y1 -= 11; b.y2 -= 11;
        }
        for (TokenBox& b : scaled.tokens) {
            b.x1 *= 3; b.x2 *= 3; b.y1 *= 3; b.y2 *= 3;
        }
        CHECK(xy_cut(moved).order == r.order);
        CHECK(xy_cut(scaled).order == r.order);
    }
}

TEST_CASE("boxes disjoint on both axes read like the (y, x) heuristic") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 50; ++round) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 60)(rng);
        std::vector<TokenBox> boxes;
        for (std::size_t i = 0; i < k; ++i) {
            const double p = 10.0 * static_cast<double>(i);
            boxes.push_back(make_box(p, p, p + 5, p + 5, 0));
        }
        const Document d = testing::shuffled(make_doc(boxes), rng);
        CHECK(xy_cut(d).order == order_yx(d));
    }
}
