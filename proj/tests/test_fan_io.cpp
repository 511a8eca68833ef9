#include <doctest.h>

#include "toric/catalog.hpp"
#include "toric/fan_io.hpp"

using namespace toric;

TEST_SUITE("fan_io") {

TEST_CASE("parse a minimal fan") {
    StackyFan fan = parse_fan(R"({
        "rank": 1,
        "B": [[1, -1]],
        "cones": [[1], [2]]
    })");
    CHECK(fan.n == 1);
    CHECK(fan.r() == 0);
    CHECK(fan.s() == 2);
    CHECK(fan.B.at(0, 1) == -1);
    REQUIRE(fan.max_cones.size() == 2);
    CHECK(fan.max_cones[1] == std::vector<std::size_t>{2});
    CHECK(fan.is_valid());
}

TEST_CASE("torsion rows and big-integer strings") {
    StackyFan fan = parse_fan(R"({
        "rank": 1,
        "torsion": [2],
        "B": [[1, -1], ["36893488147419103232", 1]],
        "cones": [[1], [2]]
    })");
    CHECK(fan.r() == 1);
    CHECK(fan.torsion[0] == 2);
    CHECK(fan.B.at(1, 0) == Int("36893488147419103232"));
}

TEST_CASE("round trip through serialize_fan") {
    for (const std::string& name : example_fan_names()) {
        StackyFan fan = example_fan(name);
        StackyFan back = parse_fan(serialize_fan(fan));
        CHECK(back.n == fan.n);
        CHECK(back.torsion == fan.torsion);
        CHECK(back.B == fan.B);
        CHECK(back.max_cones == fan.max_cones);
    }
}

TEST_CASE("errors cite the offending field") {
    auto message = [](const std::string& text) {
        try {
            parse_fan(text);
        } catch (const FanParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("[1,2]") == "top level: expected an object");
    CHECK(message(R"({"rank": 1, "B": [[1,-1]], "cones": [], "extra": 0})") ==
          "unknown field \"extra\"");
    CHECK(message(R"({"rank": 1, "cones": []})") == "missing field \"B\"");
    CHECK(message(R"({"rank": -1, "B": [], "cones": []})") ==
          "rank: expected a nonnegative integer");
    CHECK(message(R"({"rank": 2, "B": [[1,0]], "cones": []})") ==
          "B: expected 2 rows (rank + torsion count), got 1");
    CHECK(message(R"({"rank": 2, "B": [[1,0],[0]], "cones": []})") ==
          "B[1]: ragged row, expected 2 entries");
    CHECK(message(R"({"rank": 1, "B": [[1,"x"]], "cones": []})") ==
          "B[0][1]: expected an integer");
    CHECK(message(R"({"rank": 1, "B": [[1,-1]], "cones": [[0]]})") ==
          "cones[0][0]: expected a 1-based ray index");
    CHECK(message("{") .rfind("invalid JSON:", 0) == 0);
}

TEST_CASE("load_fan rejects a missing path") {
    CHECK_THROWS_AS(load_fan("/nonexistent/fan.json"), FanParseError);
}

}  // TEST_SUITE
