#include <catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "graphcode/graph.hpp"
#include "graphcode/constructions.hpp"

using graphcode::Graph;

TEST_CASE("edge list construction dedups and validates") {
    const Graph g = Graph::from_edge_list(4, {{1, 2}, {2, 1}, {2, 3}, {3, 4}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.degree(2) == 2);
    CHECK(g.neighbors(3) == std::vector<int>{2, 4});

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), graphcode::parameter_error);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 2}}), graphcode::parameter_error);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 4}}), graphcode::parameter_error);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), graphcode::parameter_error);
}

TEST_CASE("degree queries on a path") {
    const Graph p = Graph::from_edge_list(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(p.max_degree() == 2);
    CHECK(p.degree(1) == 1);
    CHECK_FALSE(p.has_isolated_vertex());
    CHECK(p.is_connected());

    const Graph split = Graph::from_edge_list(5, {{1, 2}, {3, 4}});
    CHECK_FALSE(split.is_connected());
    CHECK(split.has_isolated_vertex());
}

TEST_CASE("augmented adjacency adds the unit diagonal") {
    const Graph tri = Graph::from_edge_list(3, {{1, 2}, {2, 3}, {1, 3}});
    const graphcode::BitMatrix a = tri.augmented_adjacency();
    CHECK(a.rows() == 3);
    CHECK(a.has_unit_diagonal());
    CHECK(a.is_symmetric());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(a.get(i, j));

    const Graph pair = Graph::from_edge_list(2, {{1, 2}});
    const graphcode::BitMatrix b = pair.augmented_adjacency();
    CHECK(b.get(0, 0));
    CHECK(b.get(0, 1));
    CHECK(b.get(1, 0));
    CHECK(b.get(1, 1));
}

TEST_CASE("edge list export is sorted and round-trips") {
    const Graph g = Graph::from_edge_list(4, {{3, 4}, {1, 3}, {1, 2}});
    const std::vector<std::pair<int, int>> edges = g.to_edge_list();
    CHECK(edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {3, 4}});

    const Graph back = Graph::parse_edge_list(g.to_edge_list_text());
    CHECK(back.n() == g.n());
    CHECK(back.to_edge_list() == edges);
}

TEST_CASE("edge list text parse rejects malformed input") {
    CHECK_THROWS_AS(Graph::parse_edge_list(""), graphcode::format_error);
    CHECK_THROWS_AS(Graph::parse_edge_list("3"), graphcode::format_error);
    CHECK_THROWS_AS(Graph::parse_edge_list("3 1\n1"), graphcode::format_error);
    CHECK_THROWS_AS(Graph::parse_edge_list("3 1\n1 two"), graphcode::format_error);
    CHECK_THROWS_AS(Graph::parse_edge_list("3 2\n1 2"), graphcode::format_error);
    // Out-of-range labels inside a well-formed file are a format problem too.
    CHECK_THROWS_AS(Graph::parse_edge_list("3 1\n1 7"), graphcode::format_error);
    CHECK_THROWS_AS(Graph::parse_edge_list("3 1\n2 2"), graphcode::format_error);
}

TEST_CASE("dot export lists isolated vertices and edges") {
    const Graph g = Graph::from_edge_list(3, {{1, 2}});
    const std::string dot = g.to_dot();
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("  3;") != std::string::npos);
    CHECK(dot.find("  1 -- 2;") != std::string::npos);
}

TEST_CASE("complete graph helper") {
    const Graph k5 = graphcode::complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.max_degree() == 4);
    CHECK(k5.is_connected());
    CHECK_THROWS_AS(graphcode::complete(1), graphcode::parameter_error);
}
