#include "doctest.h"
#include "json.hpp"
#include "support/fixtures.hpp"
#include "xyorder/cli/io.hpp"

using namespace xyorder;
using namespace xyorder::cli;

namespace {

const char* kThreeBoxes = R"({
  "id": "p1", "width": 100, "height": 50,
  "tokens": [
    {"text": "a", "box": [0, 0, 10, 10]},
    {"text": "b", "box": [20, 0, 30, 10]},
    {"text": "c", "box": [0, 20, 10, 30]}
  ]
})";

const char* kFunsd = R"({"form": [
  {"id": 0, "label": "question", "box": [0, 0, 60, 10],
   "words": [{"text": "Name", "box": [0, 0, 25, 10]}, {"text": ":", "box": [26, 0, 30, 10]}]},
  {"id": 1, "label": "answer", "box": [40, 0, 90, 10],
   "words": [{"text": "Ada", "box": [40, 0, 55, 10]}, {"text": "L.", "box": [57, 0, 70, 12]}]}
]})";

}  // namespace

TEST_CASE("boxes-json parses tokens in file order") {
    const Document d = parse_document(kThreeBoxes, InputFormat::BoxesJson, "p1.json");
    CHECK(d.id == "p1");
    CHECK(d.width == 100);
    REQUIRE(d.size() == 3);
    CHECK(d.tokens[1].text == "b");
    CHECK(d.tokens[1].x1 == 20);
    CHECK(d.tokens[2].source_index == 2);
}

TEST_CASE("funsd annotations flatten words across entities") {
    const Document d = parse_document(kFunsd, InputFormat::FunsdAnnotation, "/data/form_0042.json");
    CHECK(d.id == "form_0042");
    REQUIRE(d.size() == 4);
    CHECK(d.tokens[2].text == "Ada");
    CHECK(d.tokens[3].source_index == 3);
    CHECK(d.width == 70);
    CHECK(d.height == 12);
}

TEST_CASE("malformed input is reported with context") {
    CHECK_THROWS_WITH_AS(parse_document("{\"id\": \"x\", ", InputFormat::BoxesJson, "bad.json"),
                         doctest::Contains("bad.json: malformed JSON at byte"), InputError);
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"id":"x","width":10,"height":10,"tokens":[{"text":"q","box":[5,0,1,1]}]})",
                       InputFormat::BoxesJson, "inv.json"),
        doctest::Contains("token 0"), InputError);
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"id":"x","width":10,"height":10,"tokens":[]})", InputFormat::BoxesJson, "e.json"),
        doctest::Contains("empty token list"), InputError);
    CHECK_THROWS_AS(
        parse_document(R"({"id":"x","width":10,"height":10,"tokens":[{"box":[0,0,1]}]})",
                       InputFormat::BoxesJson, "short.json"),
        InputError);
    CHECK_THROWS_AS(parse_document(R"({"form": 3})", InputFormat::FunsdAnnotation, "f.json"), InputError);
    CHECK_THROWS_AS(parse_format("xml"), InputError);
}

TEST_CASE("boxes-json round trip") {
    const Document d = testing::seven_box_layout();
    const Document back = parse_document(to_boxes_json(d), InputFormat::BoxesJson, "rt");
    CHECK(back.id == d.id);
    REQUIRE(back.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(back.tokens[i].text == d.tokens[i].text);
        CHECK(back.tokens[i].x1 == d.tokens[i].x1);
        CHECK(back.tokens[i].y2 == d.tokens[i].y2);
    }
}

TEST_CASE("order files list tokens in reading order") {
    const Document d = parse_document(kThreeBoxes, InputFormat::BoxesJson, "p1.json");
    const ReadingOrder ord{{2, 0, 1}};
    const auto j = nlohmann::json::parse(to_order_json(d, ord, "yx", 7));
    CHECK(j["id"] == "p1");
    CHECK(j["strategy"] == "yx");
    CHECK(j["seed"] == 7);
    CHECK(j["order"] == nlohmann::json::array({2, 0, 1}));
    CHECK(j["tokens"][0]["text"] == "c");
    CHECK(j["tokens"][0]["source_index"] == 2);
    CHECK(nlohmann::json::parse(to_order_json(d, ord, "xycut", std::nullopt))["seed"].is_null());

    // The order file doubles as a reference file.
    CHECK(parse_reference_order(to_order_json(d, ord, "yx", 7), "o") == ord);
    CHECK_THROWS_AS(to_order_json(d, ReadingOrder{{0, 0, 1}}, "yx", std::nullopt), InvariantViolation);
}

TEST_CASE("reference orders must be permutations") {
    CHECK(parse_reference_order(R"({"order":[1,0,2]})", "r").order == std::vector<std::size_t>{1, 0, 2});
    CHECK_THROWS_AS(parse_reference_order(R"({"order":[1,1]})", "r"), InputError);
    CHECK_THROWS_AS(parse_reference_order(R"({"order":[-1,0]})", "r"), InputError);
    CHECK_THROWS_AS(parse_reference_order(R"({"order":[0.5]})", "r"), InputError);
    CHECK_THROWS_AS(parse_reference_order(R"([0,1])", "r"), InputError);
}

TEST_CASE("tree JSON nests divisions") {
    const XYCutResult r = xy_cut(testing::seven_box_layout());
    const auto j = nlohmann::json::parse(tree_to_json(r.tree));
    CHECK(j["kind"] == "root");
    CHECK(j["axis"] == "h");
    CHECK(j["members"].size() == 7);
    CHECK(j["children"][0]["kind"] == "leaf");
    CHECK(j["children"][0]["token"] == 0);
    CHECK(j["children"][1]["kind"] == "division");
    CHECK(j["children"][1]["axis"] == "v");
    CHECK(j["children"][1]["children"].size() == 3);
}
