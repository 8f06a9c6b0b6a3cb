#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "ohmgraph/errors.hpp"
#include "ohmgraph/matrix.hpp"
#include "ohmgraph/rational.hpp"

namespace ohmgraph {

/// Clockwise rotation of incident edge indices per vertex (1-based vertex ids).
/// At a boundary vertex the list starts with the edge immediately clockwise of
/// the circle arc toward the next boundary node, so the list order is the sweep
/// through the disk interior from that arc to the arc toward the previous node.
using Embedding = std::vector<std::vector<int>>;

/// Electrical network: multigraph with positive conductances and a distinguished
/// boundary in clockwise circular order. Vertex ids are 1..vertex_count.
struct WeightedGraph {
    int vertex_count = 0;
    std::vector<int> boundary;  // vertex ids, clockwise
    struct Edge {
        int u = 0, v = 0;
        Rational c;
    };
    std::vector<Edge> edges;
    std::optional<Embedding> embedding;  // indexed by vertex id - 1 when present

    int n() const { return static_cast<int>(boundary.size()); }

    bool is_boundary(int v) const {
        return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
    }

    /// Position of vertex id in the boundary list, or -1.
    int boundary_position(int v) const {
        for (std::size_t k = 0; k < boundary.size(); ++k)
            if (boundary[k] == v) return static_cast<int>(k);
        return -1;
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;  // a loop counts twice
        }
        return d;
    }
};

inline void validate(const WeightedGraph& g) {
    if (g.vertex_count < 0) throw ParseError("negative vertex count");
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count) + 1, 0);
    for (int b : g.boundary) {
        if (b < 1 || b > g.vertex_count) throw ParseError("boundary id out of range");
        if (seen[b]) throw ParseError("duplicate boundary id");
        seen[b] = 1;
    }
    for (const auto& e : g.edges) {
        if (e.u < 1 || e.u > g.vertex_count || e.v < 1 || e.v > g.vertex_count)
            throw ParseError("edge endpoint out of range");
        if (sign(e.c) <= 0) throw ParseError("conductance must be strictly positive");
    }
    if (g.embedding) {
        const auto& emb = *g.embedding;
        if (static_cast<int>(emb.size()) != g.vertex_count)
            throw ParseError("embedding must list every vertex");
        std::vector<int> count(g.edges.size(), 0);
        for (int v = 1; v <= g.vertex_count; ++v) {
            for (int ei : emb[v - 1]) {
                if (ei < 0 || ei >= static_cast<int>(g.edges.size()))
                    throw ParseError("embedding references unknown edge");
                const auto& e = g.edges[ei];
                if (e.u != v && e.v != v) throw ParseError("embedding lists a non-incident edge");
                ++count[ei];
            }
        }
        // each edge appears once in each endpoint's rotation (twice at a loop's vertex)
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            if (count[i] != 2) throw ParseError("embedding is not a rotation system");
    }
}

namespace detail {

struct Dsu {
    explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace detail

inline bool is_connected(const WeightedGraph& g) {
    if (g.vertex_count <= 1) return true;
    detail::Dsu dsu(g.vertex_count);
    int comps = g.vertex_count;
    for (const auto& e : g.edges)
        if (dsu.unite(e.u, e.v)) --comps;
    return comps == 1;
}

/// True when every connected component contains at least one boundary node
/// (exactly the condition for the interior Laplacian block to be invertible).
inline bool every_component_touches_boundary(const WeightedGraph& g) {
    detail::Dsu dsu(g.vertex_count);
    for (const auto& e : g.edges) dsu.unite(e.u, e.v);
    std::vector<char> has(static_cast<std::size_t>(g.vertex_count) + 1, 0);
    for (int b : g.boundary) has[dsu.find(b)] = 1;
    for (int v = 1; v <= g.vertex_count; ++v)
        if (!has[dsu.find(v)]) return false;
    return true;
}

/// Weighted Laplacian; loops contribute nothing, parallel conductances add.
inline Mat laplacian(const WeightedGraph& g) {
    Mat l(g.vertex_count, g.vertex_count);
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;
        const std::size_t u = e.u - 1, v = e.v - 1;
        l(u, u) += e.c;
        l(v, v) += e.c;
        l(u, v) -= e.c;
        l(v, u) -= e.c;
    }
    return l;
}

}  // namespace ohmgraph
