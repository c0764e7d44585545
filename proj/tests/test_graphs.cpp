#include <doctest.h>

#include "oracles.hpp"
#include "rep11/errors.hpp"
#include "rep11/graph.hpp"

using namespace rep11;

TEST_CASE("generators") {
    Graph k3 = Graph::complete(3);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge("1", "2"));

    Graph e2 = Graph::empty_graph(2);
    CHECK(e2.vertex_count() == 2);
    CHECK(e2.edge_count() == 0);

    CHECK_THROWS_AS(Graph::complete(0), InputError);
}

TEST_CASE("from_edges validation") {
    CHECK_THROWS_AS(Graph::from_edges({"a", "a"}, {}), InputError);
    CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{"a", "z"}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{"a", "a"}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
}

TEST_CASE("disjoint union builds the K3-plus-isolated shape") {
    Graph u = Graph::disjoint_union(Graph::complete(3), Graph::complete(1));
    CHECK(u.vertex_count() == 4);
    CHECK(u.edge_count() == 3);
    // triangle on the first three, fourth vertex isolated
    const auto& vs = u.vertices();
    CHECK(u.has_edge(vs[0], vs[1]));
    CHECK(u.has_edge(vs[0], vs[2]));
    CHECK(u.has_edge(vs[1], vs[2]));
    CHECK_FALSE(u.has_edge(vs[0], vs[3]));
    CHECK_FALSE(u.has_edge(vs[1], vs[3]));
    CHECK_FALSE(u.has_edge(vs[2], vs[3]));
    // the colliding "1" from the right side got a suffix
    CHECK(vs[3] == "1_2");
}

TEST_CASE("disjoint union is commutative up to vertex order") {
    Graph a = Graph::from_edges({"a", "b"}, {{"a", "b"}});
    Graph b = Graph::from_edges({"x", "y", "z"}, {{"x", "z"}});
    CHECK(Graph::disjoint_union(a, b) == Graph::disjoint_union(b, a));
    CHECK(Graph::disjoint_union(a, b).edge_count() == a.edge_count() + b.edge_count());
}

TEST_CASE("text format parses the counterexample graph") {
    Graph g = Graph::parse("vertices: 1 2 3 v\nedge: 1 2\nedge: 1 3\nedge: 2 3\n");
    CHECK(g == oracles::gstar());
    CHECK(g.serialize() == "vertices: 1 2 3 v\nedge: 1 2\nedge: 1 3\nedge: 2 3\n");
}

TEST_CASE("text format tolerates comments and reports line numbers") {
    CHECK_NOTHROW(Graph::parse("# a comment\nvertices: a b # trailing\nedge: a b\n"));
    CHECK_THROWS_WITH_AS(Graph::parse("vertices: a b\nedge: a\n"),
                         doctest::Contains("line 2"), InputError);
    CHECK_THROWS_WITH_AS(Graph::parse("edge: a b\n"), doctest::Contains("line 1"), InputError);
    CHECK_THROWS_AS(Graph::parse("vertices:\n"), InputError);
    CHECK_THROWS_WITH_AS(Graph::parse("vertices: a b\nbogus: a\n"),
                         doctest::Contains("line 2"), InputError);
}

TEST_CASE("json format parses") {
    Graph g = Graph::parse(R"({"vertices": ["1","2","3","v"],
                               "edges": [["1","2"],["1","3"],["2","3"]]})");
    CHECK(g == oracles::gstar());
    CHECK_THROWS_AS(Graph::parse(R"({"vertices": ["a"]})"), InputError);
    CHECK_THROWS_AS(Graph::parse(R"({"vertices": ["a","b"], "edges": [["a","b"],["b","a"]]})"),
                    InputError);
    CHECK(Graph::parse(oracles::gstar().to_json()) == oracles::gstar());
}

TEST_CASE("parse round-trips serialize") {
    for (const Graph& g : {Graph::complete(1), Graph::complete(4), Graph::empty_graph(3),
                           oracles::gstar(), Graph::disjoint_union(Graph::complete(2), Graph::complete(2))}) {
        CHECK(Graph::parse(g.serialize()) == g);
    }
}

TEST_CASE("equality is label-based, not structural") {
    CHECK(oracles::gstar() == oracles::gstar());
    CHECK(Graph::complete(3) != Graph::empty_graph(3));
    // same labels, different declaration order: still equal
    Graph a = Graph::from_edges({"x", "y"}, {{"x", "y"}});
    Graph b = Graph::from_edges({"y", "x"}, {{"y", "x"}});
    CHECK(a == b);
    // isomorphic but differently labeled: not equal
    Graph c = Graph::from_edges({"x", "z"}, {{"x", "z"}});
    CHECK(a != c);
}
