#include <set>

#include "doctest.h"
#include "gwz/graph.hpp"

using namespace gwz;

TEST_CASE("graph construction normalizes and validates") {
    Graph g(4, {{2, 1}, {3, 4}, {1, 3}, {2, 4}});
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    // Edges are stored (u, v) with u < v, sorted.
    CHECK(g.edges()[0] == std::pair<int, int>{1, 2});
    CHECK(g.edges()[3] == std::pair<int, int>{3, 4});
    CHECK(g.degree(1) == 2);
    CHECK(g.adjacent(2, 4));
    CHECK_FALSE(g.adjacent(1, 4));

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ValidationError);              // loop
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}, {2, 3}}), ValidationError);  // parallel
    CHECK_THROWS_AS(Graph(4, {{1, 2}, {3, 4}}), ValidationError);      // disconnected
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 5}}), ValidationError);      // label range
}

TEST_CASE("arc table pairs each edge with its inverse") {
    Graph g = generate_family(GraphFamily::cycle(3));
    ArcTable arcs(g);
    CHECK(arcs.num_arcs() == 6);
    for (int e = 0; e < arcs.num_arcs(); ++e) {
        int f = arcs.inverse(e);
        CHECK(arcs.inverse(f) == e);
        CHECK(arcs.arc(e).origin == arcs.arc(f).terminus);
        CHECK(arcs.arc(e).terminus == arcs.arc(f).origin);
    }
}

TEST_CASE("family generators have the expected counts") {
    CHECK(generate_family(GraphFamily::cycle(7)).num_edges() == 7);
    Graph star = generate_family(GraphFamily::star(6));
    CHECK(star.num_edges() == 5);
    CHECK(star.degree(1) == 5);  // vertex 1 is the center
    Graph k5 = generate_family(GraphFamily::complete(5));
    CHECK(k5.num_edges() == 10);
    Graph k23 = generate_family(GraphFamily::complete_bipartite(2, 3));
    CHECK(k23.num_edges() == 6);
    CHECK_FALSE(k23.adjacent(1, 2));
    CHECK(k23.adjacent(1, 3));
}

TEST_CASE("family spec parsing") {
    GraphFamily f = parse_family_spec("bipartite:2,3");
    CHECK(f.kind == FamilyKind::CompleteBipartite);
    CHECK(f.n1 == 2);
    CHECK(f.n2 == 3);
    CHECK(parse_family_spec("cycle:5").kind == FamilyKind::Cycle);
    CHECK_THROWS_AS(parse_family_spec("torus:3"), ParseError);
    CHECK_THROWS_AS(generate_family(parse_family_spec("cycle:2")), ValidationError);
}

TEST_CASE("edge list round trip and label remapping") {
    Graph g = parse_edge_list("# triangle with offset labels\n10 20\n20 30\n\n30 10\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    Graph again = parse_edge_list(g.serialize());
    CHECK(again.edges() == g.edges());
}
