#pragma once

#include <vector>

#include "ohmgraph/graph.hpp"
#include "ohmgraph/matrix.hpp"
#include "ohmgraph/response.hpp"

namespace ohmgraph {

inline constexpr int kSpanningTreeEdgeCap = 20;

/// Effective resistances between all boundary pairs, via the voltage system
/// M_R U = -e_i + e_j grounded at the last node: with K = (M_R')^{-1},
/// R_ij = K_ii + K_jj - 2 K_ij and R_in = K_ii.
inline Mat resistance_matrix(const WeightedGraph& g) {
    if (!is_connected(g)) throw DisconnectedError("resistance is undefined between components");
    const int nb = g.n();
    Mat r(nb, nb);
    if (nb <= 1) return r;
    const Mat x = response_matrix(g);
    const Mat xp = x.without_row_col(nb - 1, nb - 1);
    const auto k = inverse(xp);
    if (!k) throw DisconnectedError("response minor is singular");
    for (int i = 0; i + 1 < nb; ++i) {
        r(i, nb - 1) = r(nb - 1, i) = (*k)(i, i);
        for (int j = 0; j + 1 < nb; ++j)
            if (i != j) r(i, j) = (*k)(i, i) + (*k)(j, j) - 2 * (*k)(i, j);
    }
    return r;
}

namespace detail {

/// Sum of conductance products over all spanning trees, by subset enumeration.
inline Rational spanning_tree_sum(int vertex_count, const std::vector<WeightedGraph::Edge>& edges) {
    // collapse to the vertices that actually appear plus isolated ones
    if (vertex_count == 0) return 1;
    const int m = static_cast<int>(edges.size());
    const int need = vertex_count - 1;
    if (need < 0 || need > m) return vertex_count == 1 && need <= 0 ? Rational(1) : Rational(0);
    Rational total = 0;
    std::vector<int> pick(need);
    // iterate over all need-subsets of edges
    for (int i = 0; i < need; ++i) pick[i] = i;
    while (true) {
        Dsu dsu(vertex_count);
        int comps = vertex_count;
        bool acyclic = true;
        for (int i = 0; i < need && acyclic; ++i) {
            const auto& e = edges[pick[i]];
            if (e.u == e.v || !dsu.unite(e.u, e.v))
                acyclic = false;
            else
                --comps;
        }
        if (acyclic && comps == 1) {
            Rational w = 1;
            for (int i = 0; i < need; ++i) w *= edges[pick[i]].c;
            total += w;
        }
        // next combination
        int i = need - 1;
        while (i >= 0 && pick[i] == m - need + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

}  // namespace detail

/// T(graph, conductances) by enumeration, cross-checked against a Laplacian
/// cofactor (matrix-tree theorem). Requires edge count within the cap.
inline Rational spanning_tree_polynomial(const WeightedGraph& g,
                                         int edge_cap = kSpanningTreeEdgeCap) {
    if (static_cast<int>(g.edges.size()) > edge_cap)
        throw TooLargeError("edge count exceeds the spanning tree enumeration cap");
    const Rational enumerated = detail::spanning_tree_sum(g.vertex_count, g.edges);
    Rational cofactor = 0;
    if (g.vertex_count >= 1) {
        const Mat l = laplacian(g);
        cofactor = g.vertex_count == 1 ? Rational(1) : det(l.without_row_col(0, 0));
    }
    if (enumerated != cofactor)
        throw Error("matrix-tree cross-check failed (internal)");
    return enumerated;
}

/// Kirchhoff quotient R_ij = T(graph with i,j merged) / T(graph). The pair is
/// given as boundary positions (1-based), matching resistance_matrix indices.
inline Rational resistance_oracle(const WeightedGraph& g, int i, int j,
                                  int edge_cap = kSpanningTreeEdgeCap) {
    if (!is_connected(g)) throw DisconnectedError("resistance is undefined between components");
    if (static_cast<int>(g.edges.size()) > edge_cap)
        throw TooLargeError("edge count exceeds the spanning tree enumeration cap");
    const int nb = g.n();
    if (i < 1 || i > nb || j < 1 || j > nb || i == j)
        throw ParseError("oracle pair must be two distinct boundary positions");
    const int vi = g.boundary[i - 1], vj = g.boundary[j - 1];
    const Rational t_g = detail::spanning_tree_sum(g.vertex_count, g.edges);
    // contract vi and vj: relabel vj -> vi, drop resulting loops inside the sum
    std::vector<WeightedGraph::Edge> merged;
    merged.reserve(g.edges.size());
    for (auto e : g.edges) {
        if (e.u == vj) e.u = vi;
        if (e.v == vj) e.v = vi;
        merged.push_back(e);
    }
    // the merged graph has one fewer vertex; relabel to 1..vc-1
    std::vector<int> relabel(g.vertex_count + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.vertex_count; ++v)
        if (v != vj) relabel[v] = ++next;
    for (auto& e : merged) {
        e.u = relabel[e.u];
        e.v = relabel[e.v];
    }
    const Rational t_contracted = detail::spanning_tree_sum(g.vertex_count - 1, merged);
    return t_contracted / t_g;
}

}  // namespace ohmgraph
