#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ccg/enumerate.hpp"
#include "ccg/graph.hpp"
#include "ccg/io.hpp"

using namespace ccg;

TEST_CASE("oriented graphs reject loops, duplicates and digons") {
    OrientedGraph g(3);
    g.add_arc(0, 1);
    CHECK_THROWS_AS(g.add_arc(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(0, 3), std::invalid_argument);
    CHECK(g.arc_count() == 1);
}

TEST_CASE("coloured graphs keep red and blue disjoint") {
    TwoEdgeColouredGraph g(3);
    g.add_edge(0, 1, Colour::Red);
    CHECK_THROWS_AS(g.add_edge(1, 0, Colour::Blue), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2, Colour::Red), std::invalid_argument);
    CHECK(g.edge_colour(1, 0) == Colour::Red);
    CHECK(!g.edge_colour(0, 2));
}

TEST_CASE("parse the spec'd formats") {
    auto f = parse_graph_file("kind oriented\nn 3\narc 0 1\narc 1 2\narc 2 0\n");
    auto& og = std::get<OrientedGraph>(f.graph);
    CHECK(og.n() == 3);
    CHECK(og.has_arc(2, 0));

    auto f2 = parse_graph_file("kind 2ec\nn 2\nedge 0 1 r\n");
    auto& cg = std::get<TwoEdgeColouredGraph>(f2.graph);
    CHECK(cg.edge_colour(0, 1) == Colour::Red);

    CHECK_THROWS_AS(parse_graph_file("kind oriented\nn 2\narc 0 1\narc 1 0\n"), ParseError);

    // errors carry the offending line number
    try {
        parse_graph_file("kind oriented\nn 2\narc 0 1\narc 1 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }

    CHECK_THROWS_AS(parse_graph_file("kind 2ec\nn 2\nedge 0 1 g\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_file("n 2\nedge 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_file("kind graph\nn 2\nedge 0 5\n"), ParseError);
}

TEST_CASE("serialization is canonical and parse round-trips") {
    OrientedGraph c3(3);
    c3.add_arc(2, 0);
    c3.add_arc(0, 1);
    c3.add_arc(1, 2);
    CHECK(serialize_graph(c3) == "kind oriented\nn 3\narc 0 1\narc 1 2\narc 2 0\n");

    TwoEdgeColouredGraph k2(2);
    k2.add_edge(0, 1, Colour::Red);
    CHECK(serialize_graph(k2) == "kind 2ec\nn 2\nedge 0 1 r\n");

    OrientedGraph lone(1);
    CHECK(serialize_graph(lone) == "kind oriented\nn 1\n");
}

TEST_CASE("parse after serialize is the identity on every small graph") {
    // all oriented and coloured graphs on up to 4 vertices, plus spot checks at 5
    for (int n = 1; n <= 4; ++n) {
        for_each_oriented_graph(n, false, [&](const OrientedGraph& g) {
            auto f = parse_graph_file(serialize_graph(g));
            CHECK(std::get<OrientedGraph>(f.graph) == g);
        });
        for_each_two_edge_coloured_graph(n, false, [&](const TwoEdgeColouredGraph& g) {
            auto f = parse_graph_file(serialize_graph(g));
            CHECK(std::get<TwoEdgeColouredGraph>(f.graph) == g);
        });
    }
    std::mt19937_64 rng(7);
    SimpleGraph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    for (int i = 0; i < 200; ++i) {
        OrientedGraph g = orientation_from_mask(k5, rng() & 1023);
        auto f = parse_graph_file(serialize_graph(g));
        REQUIRE(std::get<OrientedGraph>(f.graph) == g);
        TwoEdgeColouredGraph c = colouring_from_mask(k5, rng() & 1023);
        auto f2 = parse_graph_file(serialize_graph(c));
        REQUIRE(std::get<TwoEdgeColouredGraph>(f2.graph) == c);
    }
}

TEST_CASE("labels and map lines survive a round trip") {
    std::string text = "kind graph\nn 2\n# label 0 b\n# label 1 x1\nedge 0 1\n";
    auto f = parse_graph_file(text);
    REQUIRE(f.labels.size() == 2);
    CHECK(f.labels[1].second == "x1");
    CHECK(serialize_graph(std::get<SimpleGraph>(f.graph), f.labels) == text);

    auto w = parse_graph_file("kind oriented\nn 2\narc 0 1\nmap 0 0\nmap 1 0\nmap 2 1\n");
    REQUIRE(w.maps.size() == 3);
    CHECK(w.maps[2] == std::pair<int, int>(2, 1));
}

TEST_CASE("vertex sets behave as sets") {
    VertexSet a = VertexSet::of(6, {0, 2, 4});
    VertexSet b = VertexSet::of(6, {2, 3});
    CHECK(a.count() == 3);
    CHECK(a.intersects(b));
    VertexSet c = a;
    c &= b;
    CHECK(c == VertexSet::of(6, {2}));
    c = a;
    c |= b;
    CHECK(c.count() == 4);
    c.and_not(b);
    CHECK(c == VertexSet::of(6, {0, 4}));
    CHECK(VertexSet::of(6, {2}).is_subset_of(b));
    CHECK(a.to_string() == "{0,2,4}");
    CHECK_THROWS_AS(a.intersects(VertexSet(5)), std::invalid_argument);
    // above one word
    VertexSet big(130);
    big.set(129);
    big.set(0);
    CHECK(big.count() == 2);
    CHECK(big.to_vector() == std::vector<int>{0, 129});
}
