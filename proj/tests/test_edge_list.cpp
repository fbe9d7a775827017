#include <doctest.h>

#include "signedpinv/edge_list.hpp"
#include "test_support.hpp"

using namespace signedpinv;

TEST_SUITE_BEGIN("edgelist");

TEST_CASE("basic parsing with default marks") {
    const SignedGraph g = parse_edge_list("1 2 +\n2 3 -\n");
    CHECK(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edge(0) == make_edge(1, 2, 1));
    CHECK(g.edge(1) == make_edge(2, 3, -1));
    CHECK(g.edge(0).eta_u == 1);
    CHECK(g.edge(0).eta_v == -1);
    CHECK(g.edge(1).eta_u == 1);
    CHECK(g.edge(1).eta_v == 1);
}

TEST_CASE("sign token variants") {
    const SignedGraph g = parse_edge_list("1 2 +1\n1 3 1\n1 4 -1\n");
    CHECK(g.edge(0).sigma == 1);
    CHECK(g.edge(1).sigma == 1);
    CHECK(g.edge(2).sigma == -1);
}

TEST_CASE("comments, blank lines, and the header") {
    const SignedGraph g = parse_edge_list(
        "# a comment line\n"
        "n 5\n"
        "\n"
        "1 2 + # trailing comment\n"
        "   \n"
        "2 3 -\n");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("explicit marks and endpoint order") {
    const SignedGraph g = parse_edge_list("5 3 + 1 -1\n");
    CHECK(g.edge(0).u == 3);
    CHECK(g.edge(0).v == 5);
    CHECK(g.edge(0).eta_u == -1);
    CHECK(g.edge(0).eta_v == 1);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 + 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 *\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 1 +\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 2 +\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 x +\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 + 2 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 - -1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 + 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 +\n2 1 -\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n1 3 +\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 +\nn 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\nn 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n two\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/file.sg"), ParseError);
}

TEST_CASE("negative edge marks must agree with the sign") {
    // A negative edge carries marks with product +1.
    CHECK_NOTHROW(parse_edge_list("1 2 - 1 1\n"));
    CHECK_NOTHROW(parse_edge_list("1 2 - -1 -1\n"));
    CHECK_THROWS_AS(parse_edge_list("1 2 - 1 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 - -1 1\n"), ParseError);
}

TEST_CASE("serialization round trips and is canonical") {
    for (const char* name : {"tree.sg", "gamma1.sg", "gamma2.sg", "gamma3.sg"}) {
        const SignedGraph g = testsupport::load_fixture(name);
        const SignedGraph back = parse_edge_list(to_edge_list(g));
        REQUIRE(back.edge_count() == g.edge_count());
        CHECK(back.vertex_count() == g.vertex_count());
        for (int i = 0; i < g.edge_count(); ++i) CHECK(back.edge(i) == g.edge(i));
        CHECK(to_edge_list(back) == to_edge_list(g));
    }
    // Differently written inputs for the same graph normalize identically.
    const std::string a = to_edge_list(parse_edge_list("2 1 +1\n"));
    const std::string b = to_edge_list(parse_edge_list("n 2\n1 2 + 1 -1\n"));
    CHECK(a == b);
    CHECK(a == "n 2\n1 2 + 1 -1\n");
}

TEST_CASE("header allows isolated vertices") {
    const SignedGraph g = parse_edge_list("n 3\n1 2 +\n");
    CHECK(g.vertex_count() == 3);
    CHECK(!is_connected(g));
}

TEST_SUITE_END();
