#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "support/random_docs.hpp"
#include "xyorder/projection.hpp"

using namespace xyorder;
using xyorder::testing::make_box;

TEST_CASE("coverage counts containing intervals") {
    const std::vector<TokenBox> boxes{make_box(0, 0, 10, 10, 0), make_box(0, 20, 10, 30, 1)};
    const ProjectionProfile p = profile(boxes, Axis::Horizontal);
    CHECK(p.coverage(5) == 1);
    CHECK(p.coverage(15) == 0);
    CHECK(p.coverage(25) == 1);
    CHECK(p.coverage(-1) == 0);
    CHECK(p.coverage(31) == 0);
    CHECK(p.lo == 0);
    CHECK(p.hi == 30);
}

TEST_CASE("identical boxes stack") {
    const std::vector<TokenBox> boxes{make_box(0, 0, 10, 10, 0), make_box(0, 0, 10, 10, 1)};
    CHECK(profile(boxes, Axis::Horizontal).coverage(5) == 2);
    CHECK(profile(boxes, Axis::Vertical).coverage(10) == 2);
}

TEST_CASE("profile of an empty set is an error") {
    CHECK_THROWS_AS(profile(std::vector<TokenBox>{}, Axis::Horizontal), InputError);
}

TEST_CASE("valleys between disjoint intervals only") {
    const std::vector<TokenBox> apart{make_box(0, 0, 10, 10, 0), make_box(0, 20, 10, 30, 1)};
    const auto v = valleys(profile(apart, Axis::Horizontal));
    REQUIRE(v.size() == 1);
    CHECK(v[0] == Valley{10, 20});
    CHECK(valleys(profile(apart, Axis::Vertical)).empty());

    const std::vector<TokenBox> overlapping{make_box(0, 0, 10, 10, 0), make_box(0, 5, 10, 30, 1)};
    CHECK(valleys(profile(overlapping, Axis::Horizontal)).empty());
}

TEST_CASE("touching closed intervals leave no valley") {
    const std::vector<TokenBox> touching{make_box(0, 0, 5, 10, 0), make_box(0, 10, 5, 20, 1)};
    const ProjectionProfile p = profile(touching, Axis::Horizontal);
    CHECK(p.coverage(10) == 2);
    CHECK(valleys(p).empty());
}

TEST_CASE("degenerate boxes project to a point") {
    const std::vector<TokenBox> boxes{make_box(3, 3, 3, 3, 0), make_box(0, 7, 1, 9, 1)};
    const ProjectionProfile p = profile(boxes, Axis::Horizontal);
    CHECK(p.coverage(3) == 1);
    CHECK(p.coverage(3.5) == 0);
    REQUIRE(valleys(p).size() == 1);
    CHECK(valleys(p)[0] == Valley{3, 7});
}

TEST_CASE("coverage agrees with per-box containment counts") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> sample(-10.0, 1410.0);
    for (int round = 0; round < 20; ++round) {
        const Document d = testing::random_document(rng, 50, testing::Layout::Scatter);
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
            const ProjectionProfile p = profile(d.tokens, axis);
            for (int i = 0; i < 1000; ++i) {
                // Mix continuous samples with exact integer endpoints.
                const double t = (i % 2 == 0) ? sample(rng) : std::round(sample(rng));
                REQUIRE(p.coverage(t) == testing::brute_coverage(d.tokens, axis, t));
            }
        }
    }
}

TEST_CASE("valleys are the complement of the interval union") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 200; ++round) {
        const Document d = testing::random_document(rng, 60);
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
            const auto got = valleys(profile(d.tokens, axis));
            const auto want = testing::brute_gaps(d.tokens, axis);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].start == want[i].first);
                CHECK(got[i].end == want[i].second);
                CHECK(got[i].width() > 0.0);
            }
            CHECK(got.size() <= d.size() - 1);
        }
    }
}

TEST_CASE("coverage integral equals total interval length") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 100; ++round) {
        const Document d = testing::random_document(rng, 120);
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
            double total = 0.0;
            for (const TokenBox& b : d.tokens) {
                auto [a, e] = testing::interval_of(b, axis);
                total += e - a;
            }
            CHECK(profile(d.tokens, axis).integral() == doctest::Approx(total).epsilon(1e-12));
        }
    }
}

TEST_CASE("valleys do not depend on box order") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 100; ++round) {
        const Document d = testing::random_document(rng, 80);
        const Document s = testing::shuffled(d, rng);
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
            CHECK(valleys(profile(d.tokens, axis)) == valleys(profile(s.tokens, axis)));
            CHECK(profile(d.tokens, axis).breakpoints == profile(s.tokens, axis).breakpoints);
        }
    }
}
