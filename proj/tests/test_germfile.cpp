#include "doctest.h"
#include "test_util.hpp"

#include "germ/germfile.hpp"
#include "germ/multipoint.hpp"

using namespace germ;
using namespace germ::test;

namespace {

const char* kBigerm =
    "target T X Y Z;\n"
    "branch f1 source t x y : t, x, y^3 + t*y, x*y + y^5;\n"
    "branch f2 source t' x' y' : t', x', y', t';\n";

}  // namespace

TEST_CASE("parses the bi-germ description") {
    auto g = parse_germ_file(kBigerm);
    REQUIRE(g.branches.size() == 2);
    CHECK(g.target->variables() == std::vector<std::string>{"T", "X", "Y", "Z"});
    CHECK(g.branches[0].name == "f1");
    CHECK(g.branches[0].source->variables() == std::vector<std::string>{"t", "x", "y"});
    auto s1 = g.branches[0].source;
    CHECK(g.branches[0].components[2] == P(s1, "y^3 + t*y"));
    CHECK(g.branches[1].components[3] == P(g.branches[1].source, "t'"));
}

TEST_CASE("comments and flexible whitespace are accepted") {
    auto g = parse_germ_file(
        "# a plane curve seen as a mono-germ\n"
        "target X Y;  # two target variables\n"
        "branch c source t :\n   t^2,\n   t^3;  # the cusp\n");
    REQUIRE(g.branches.size() == 1);
    CHECK(g.branches[0].components[1] == P(g.branches[0].source, "t^3"));
}

TEST_CASE("serialization round-trips") {
    auto g = parse_germ_file(kBigerm);
    auto h = parse_germ_file(to_germ_file(g));
    REQUIRE(h.branches.size() == g.branches.size());
    CHECK(h.target->variables() == g.target->variables());
    for (std::size_t i = 0; i < g.branches.size(); ++i)
        for (std::size_t c = 0; c < g.branches[i].components.size(); ++c)
            CHECK(h.branches[i].components[c].to_string() ==
                  g.branches[i].components[c].to_string());
}

TEST_CASE("a parsed germ computes like a hand-built one") {
    auto g = parse_germ_file(kBigerm);
    auto tgt = g.target;
    CHECK(equals(target_space(g, 4), Ideal(tgt, {P(tgt, "X"), P(tgt, "Y"), P(tgt, "Z"),
                                                 P(tgt, "T")}),
                 Mode::Local));
}

TEST_CASE("malformed inputs are rejected with positions") {
    CHECK_THROWS_AS(parse_germ_file(""), parse_error);
    CHECK_THROWS_AS(parse_germ_file("branch f source t : t, t;"), parse_error);  // no target
    CHECK_THROWS_AS(parse_germ_file("target X Y;\ntarget X Y;"), parse_error);
    CHECK_THROWS_AS(parse_germ_file("germ X Y;"), parse_error);
    CHECK_THROWS_AS(parse_germ_file("target X Y;\nbranch f src t : t, t;"), parse_error);
    CHECK_THROWS_AS(parse_germ_file("target X Y;\nbranch f source t : t, t"), parse_error);

    try {
        parse_germ_file("target X Y;\nbranch f source t : t, t +;");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("mathematically invalid germs are rejected after parsing") {
    // wrong component count for the target arity
    CHECK_THROWS_AS(parse_germ_file("target X Y Z;\nbranch f source a b : a, b;"), error);
    // component not vanishing at the origin
    CHECK_THROWS_AS(parse_germ_file("target X Y;\nbranch f source t : t, t + 1;"), error);
}

TEST_CASE("loading from a missing path reports the path") {
    try {
        load_germ_file("/nonexistent/g.germ");
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/g.germ") != std::string::npos);
    }
}
