#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricbunch/document.hpp"
#include "toricbunch/errors.hpp"

using namespace toric;

TEST_CASE("all built-in examples load and reload byte-stably") {
    for (const std::string& name : builtin_example_names()) {
        Document d = builtin_example(name);
        std::string text = serialize(d);
        Document reparsed = parse_document(text);
        CHECK(reparsed.kind == d.kind);
        CHECK(serialize(reparsed) == text);
        if (d.kind == "bunch") CHECK(*reparsed.bunch == *d.bunch);
        if (d.kind == "fan") CHECK(*reparsed.fan == *d.fan);
    }
    CHECK_THROWS_AS(builtin_example("nope"), UnknownExample);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_document("{\n  \"kind\": \"bunch\",\n  oops\n}");
        CHECK(false);
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_document("[]"), ParseError);
    CHECK_THROWS_AS(parse_document("{\"kind\": \"orbifold\"}"), ParseError);
}

TEST_CASE("verification failures surface on load") {
    // {0} together with the half line is no bunch.
    std::string text = R"({
      "kind": "bunch",
      "k_rank": 1,
      "weights": [[1],[2],[3]],
      "bunch": [[], [0,1,2]]
    })";
    CHECK_THROWS_AS(parse_document(text), ConditionViolated);
}

TEST_CASE("weights outside the generated lattice are rejected") {
    std::string text = R"({
      "kind": "bunch",
      "k_rank": 1,
      "weights": [[2],[4]],
      "bunch": [[0,1]]
    })";
    CHECK_THROWS(parse_document(text));
}

TEST_CASE("fan document round trip with explicit data") {
    std::string text = R"({
      "kind": "fan",
      "name": "plane",
      "n_rank": 2,
      "rays": [[1,0],[0,1],[-1,-1]],
      "max_cones": [[0,1],[1,2],[2,0]]
    })";
    Document d = parse_document(text);
    REQUIRE(d.fan.has_value());
    CHECK(d.fan->max_cones.size() == 3);
    Document again = parse_document(serialize(d));
    CHECK(*again.fan == *d.fan);
}

TEST_CASE("non-free bunches serialize with their projected cone") {
    Fan f = make_fan(2,
                     {{Int(1), Int(0)}, {Int(-1), Int(0)}, {Int(1), Int(2)}, {Int(-1), Int(-2)}},
                     {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
    Bunch b = fan_to_bunch(f);
    REQUIRE_FALSE(is_free(b));
    Document d = make_bunch_document(b, "torsion");
    std::string text = serialize(d);
    CHECK(text.find("gamma_generators") != std::string::npos);
    CHECK(text.find("q_matrix") != std::string::npos);
    Document reparsed = parse_document(text);
    CHECK(*reparsed.bunch == b);
}

TEST_CASE("big integers fall back to strings") {
    WeightSystem ws{1, {IntVector{Int(1)}, IntVector{Int("36893488147419103232")}}};  // 2^65
    Bunch b = bunch_from_weights(ws, {{0, 1}});
    std::string text = serialize(make_bunch_document(b, "big"));
    CHECK(text.find("\"36893488147419103232\"") != std::string::npos);
    Document reparsed = parse_document(text);
    CHECK(*reparsed.bunch == b);
}

TEST_CASE("eikelberg documents carry the moved ray") {
    Document d = builtin_example("eikelberg-delta-prime");
    REQUIRE(d.fan.has_value());
    bool found = false;
    for (const IntVector& r : d.fan->rays)
        if (r == IntVector{Int(1), Int(2), Int(3)}) found = true;
    CHECK(found);
}
