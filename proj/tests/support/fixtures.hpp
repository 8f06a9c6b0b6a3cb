#pragma once

#include "ohmgraph/graph.hpp"
#include "ohmgraph/matrix.hpp"

namespace fixtures {

using ohmgraph::Embedding;
using ohmgraph::Mat;
using ohmgraph::Rational;
using ohmgraph::WeightedGraph;

/// Four-leaf unit tree: boundary 1..4 clockwise, interior 5 (adjacent to 1, 4)
/// and 6 (adjacent to 2, 3), bridge 5-6. Drawn with 1 NE, 2 SE, 3 SW, 4 NW.
inline WeightedGraph four_leaf_tree() {
    WeightedGraph g;
    g.vertex_count = 6;
    g.boundary = {1, 2, 3, 4};
    g.edges = {
        {1, 5, 1},  // e0
        {4, 5, 1},  // e1
        {2, 6, 1},  // e2
        {3, 6, 1},  // e3
        {5, 6, 1},  // e4
    };
    Embedding emb(6);
    emb[0] = {0};
    emb[1] = {2};
    emb[2] = {3};
    emb[3] = {1};
    emb[4] = {0, 4, 1};  // at 5: toward 1, toward 6, toward 4
    emb[5] = {4, 2, 3};  // at 6: toward 5, toward 2, toward 3
    g.embedding = emb;
    return g;
}

/// Resistance matrix of the unit four-leaf tree.
inline Mat tree_metric() {
    return Mat{{0, 3, 3, 2}, {3, 0, 2, 3}, {3, 2, 0, 3}, {2, 3, 3, 0}};
}

/// Response matrix of the unit four-leaf tree.
inline Mat tree_response() {
    const Rational a(5, 8), b(-1, 8), c(-3, 8);
    return Mat{{a, b, b, c}, {b, a, c, b}, {b, c, a, b}, {c, b, b, a}};
}

/// Star on three boundary nodes with interior hub 4, unit legs.
inline WeightedGraph unit_star() {
    WeightedGraph g;
    g.vertex_count = 4;
    g.boundary = {1, 2, 3};
    g.edges = {{1, 4, 1}, {2, 4, 1}, {3, 4, 1}};
    Embedding emb(4);
    emb[0] = {0};
    emb[1] = {1};
    emb[2] = {2};
    emb[3] = {0, 1, 2};
    g.embedding = emb;
    return g;
}

/// Triangle on three boundary nodes, unit conductances.
inline WeightedGraph unit_triangle() {
    WeightedGraph g;
    g.vertex_count = 3;
    g.boundary = {1, 2, 3};
    g.edges = {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}};
    Embedding emb(3);
    emb[0] = {0, 2};
    emb[1] = {1, 0};
    emb[2] = {2, 1};
    g.embedding = emb;
    return g;
}

/// Single boundary-to-boundary edge.
inline WeightedGraph single_edge(Rational c = 1) {
    WeightedGraph g;
    g.vertex_count = 2;
    g.boundary = {1, 2};
    g.edges = {{1, 2, c}};
    Embedding emb(2);
    emb[0] = {0};
    emb[1] = {0};
    g.embedding = emb;
    return g;
}

/// Path 1 - 3 - 2 with interior middle vertex, unit conductances.
inline WeightedGraph interior_path() {
    WeightedGraph g;
    g.vertex_count = 3;
    g.boundary = {1, 2};
    g.edges = {{1, 3, 1}, {3, 2, 1}};
    return g;
}

}  // namespace fixtures
