#include <catch2/catch_amalgamated.hpp>

#include "ohmgraph/resistance.hpp"
#include "ohmgraph/response.hpp"
#include "ohmgraph/transform.hpp"
#include "support/fixtures.hpp"

using namespace ohmgraph;

TEST_CASE("series merges two unit edges into a half") {
    const WeightedGraph g = fixtures::interior_path();
    const WeightedGraph out = transform(g, Move::series, {3});
    REQUIRE(out.edges.size() == 1);
    CHECK(out.edges[0].c == rat(1, 2));
    CHECK(out.vertex_count == 2);
    CHECK(response_matrix(out) == response_matrix(g));
}

TEST_CASE("parallel adds conductances") {
    WeightedGraph g;
    g.vertex_count = 2;
    g.boundary = {1, 2};
    g.edges = {{1, 2, 1}, {1, 2, 2}};
    const WeightedGraph out = transform(g, Move::parallel, {0, 1});
    REQUIRE(out.edges.size() == 1);
    CHECK(out.edges[0].c == 3);
}

TEST_CASE("unit star becomes a third-conductance triangle with the same response") {
    const WeightedGraph star = fixtures::unit_star();
    const WeightedGraph tri = transform(star, Move::star_to_triangle, {4});
    REQUIRE(tri.edges.size() == 3);
    for (const auto& e : tri.edges) CHECK(e.c == rat(1, 3));
    CHECK(response_matrix(tri) == response_matrix(star));
}

TEST_CASE("triangle-star round trip restores conductances exactly") {
    WeightedGraph tri;
    tri.vertex_count = 3;
    tri.boundary = {1, 2, 3};
    tri.edges = {{1, 2, rat(3, 7)}, {2, 3, rat(5, 2)}, {3, 1, rat(1, 4)}};
    const WeightedGraph star = transform(tri, Move::triangle_to_star, {1, 2, 3});
    CHECK(star.vertex_count == 4);
    CHECK(response_matrix(star) == response_matrix(tri));
    const WeightedGraph back = transform(star, Move::star_to_triangle, {4});
    CHECK(response_matrix(back) == response_matrix(tri));
    for (const auto& e : back.edges) {
        const auto match = [&](int u, int v) {
            return (e.u == u && e.v == v) || (e.u == v && e.v == u);
        };
        if (match(1, 2)) CHECK(e.c == rat(3, 7));
        if (match(2, 3)) CHECK(e.c == rat(5, 2));
        if (match(3, 1)) CHECK(e.c == rat(1, 4));
    }
}

TEST_CASE("loop and pendant removal preserve the response") {
    WeightedGraph g = fixtures::interior_path();
    g.edges.push_back({3, 3, rat(9)});
    const Mat want = response_matrix(fixtures::interior_path());
    WeightedGraph no_loop = transform(g, Move::remove_loop, {2});
    CHECK(response_matrix(no_loop) == want);

    WeightedGraph pend = fixtures::interior_path();
    pend.vertex_count = 4;
    pend.edges.push_back({3, 4, rat(11, 2)});
    const WeightedGraph out = transform(pend, Move::remove_pendant, {4});
    CHECK(response_matrix(out) == want);
}

TEST_CASE("bad sites are rejected") {
    const WeightedGraph g = fixtures::four_leaf_tree();
    CHECK_THROWS_AS(transform(g, Move::remove_loop, {0}), BadSiteError);
    CHECK_THROWS_AS(transform(g, Move::remove_pendant, {1}), BadSiteError);   // boundary
    CHECK_THROWS_AS(transform(g, Move::remove_pendant, {5}), BadSiteError);   // degree 3
    CHECK_THROWS_AS(transform(g, Move::series, {5}), BadSiteError);
    CHECK_THROWS_AS(transform(g, Move::parallel, {0, 1}), BadSiteError);
    CHECK_THROWS_AS(transform(g, Move::star_to_triangle, {1}), BadSiteError);
    CHECK_THROWS_AS(transform(g, Move::triangle_to_star, {1, 2, 3}), BadSiteError);
    CHECK_THROWS_AS(transform(fixtures::unit_star(), Move::series, {4}), BadSiteError);
}

TEST_CASE("simplify collapses a two-hop interior path to one edge") {
    WeightedGraph g;
    g.vertex_count = 4;
    g.boundary = {1, 2};
    g.edges = {{1, 3, 1}, {3, 4, 1}, {4, 2, 1}};
    const WeightedGraph out = simplify(g);
    REQUIRE(out.edges.size() == 1);
    CHECK(out.edges[0].c == rat(1, 3));
    CHECK(out.vertex_count == 2);
}

TEST_CASE("simplify removes loops but keeps the carrying edge") {
    WeightedGraph g = fixtures::single_edge();
    g.vertex_count = 3;
    g.edges.push_back({3, 3, 1});
    g.edges.push_back({1, 3, 1});  // pendant interior with a loop on it
    const WeightedGraph out = simplify(g);
    REQUIRE(out.edges.size() == 1);
    CHECK(out.vertex_count == 2);
    CHECK(response_matrix(out) == response_matrix(fixtures::single_edge()));
}

TEST_CASE("simplify leaves the reduced tree unchanged") {
    WeightedGraph tree = fixtures::four_leaf_tree();
    tree.embedding.reset();
    const WeightedGraph out = simplify(tree);
    CHECK(out.vertex_count == tree.vertex_count);
    CHECK(out.edges.size() == tree.edges.size());
    CHECK(response_matrix(out) == response_matrix(tree));
}

TEST_CASE("simplify reduces series into parallels into one edge") {
    // two parallel two-hop paths between the boundary pair
    WeightedGraph g;
    g.vertex_count = 4;
    g.boundary = {1, 2};
    g.edges = {{1, 3, 1}, {3, 2, 1}, {1, 4, 2}, {4, 2, 2}};
    const WeightedGraph out = simplify(g);
    REQUIRE(out.edges.size() == 1);
    CHECK(out.edges[0].c == rat(3, 2));
    CHECK(response_matrix(out) == response_matrix(g));
}
