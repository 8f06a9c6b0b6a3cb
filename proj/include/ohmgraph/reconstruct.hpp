#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ohmgraph/arrangement.hpp"
#include "ohmgraph/electrical.hpp"
#include "ohmgraph/resistance.hpp"
#include "ohmgraph/strands.hpp"
#include "ohmgraph/transform.hpp"

namespace ohmgraph {

/// Strand permutation of a distance matrix via the matrix route.
inline StrandPermutation strands_of_metric(const Mat& d, const CircularOrder& order) {
    const OmegaMatrix omega = build_omega_resistance(d, order);
    return strand_permutation(column_permutation_g(omega));
}

/// Strand permutation of a connected network, computed on its own resistance
/// matrix. Weight-independent for a fixed topology.
inline StrandPermutation strands_of_network(const WeightedGraph& g) {
    const Mat r = resistance_matrix(g);
    return strands_of_metric(r, identity_order(g.n()));
}

/// Minimal unit-conductance topology realizing the strand data of D:
/// Omega_R -> g -> tau -> chord arrangement -> black-face network.
/// Requires D to pass is_electrical_via_grassmannian in this order.
inline WeightedGraph reconstruct_topology(const Mat& d, const CircularOrder& order,
                                          int node_cap = kPluckerNodeCap) {
    const auto decision = is_electrical_via_grassmannian(d, order, node_cap);
    if (!decision.yes)
        throw NotKalmansonError("matrix is not an electrical Kalmanson metric: " + decision.reason);
    const auto sp = strands_of_metric(d, order);
    const auto arr = build_chord_arrangement(sp);
    return arrangement_to_network(arr);
}

/// True when the strand permutation survives the round trip through the
/// unit-weight reconstruction.
inline bool verify_round_trip(const Mat& d, const CircularOrder& order,
                              int node_cap = kPluckerNodeCap) {
    const auto sp = strands_of_metric(d, order);
    const WeightedGraph rebuilt = reconstruct_topology(d, order, node_cap);
    const auto sp2 = strands_of_network(rebuilt);
    return sp.tau == sp2.tau;
}

/// Greedy triangle elimination: repeatedly apply a triangle-to-star move at the
/// lexicographically least vertex triple carrying a triangle, simplifying after
/// each move. Heuristic; reports instead of looping forever.
inline WeightedGraph triangles_to_stars(const WeightedGraph& g) {
    if (!is_connected(g)) throw DisconnectedError("triangle elimination expects a connected network");
    WeightedGraph cur = simplify(g);
    const int cap = 10 * g.n() * g.n();
    for (int iter = 0; iter <= cap; ++iter) {
        // least triangle by vertex triple
        std::set<std::pair<int, int>> present;
        for (const auto& e : cur.edges)
            present.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
        std::array<int, 3> best{0, 0, 0};
        bool found = false;
        for (const auto& [a, b] : present) {
            if (found) break;
            for (int c = b + 1; c <= cur.vertex_count && !found; ++c)
                if (present.count({a, c}) && present.count({b, c})) {
                    best = {a, b, c};
                    found = true;
                }
        }
        if (!found) return cur;
        cur = simplify(transform(cur, Move::triangle_to_star, {best[0], best[1], best[2]}));
    }
    throw NotTerminatedError("triangle elimination hit its iteration cap");
}

/// Exact edge resistances making the tree's path metric reproduce D; returns
/// the tree with conductances = reciprocal resistances.
inline WeightedGraph fit_tree_weights(const WeightedGraph& tree, const Mat& d) {
    const int nb = tree.n();
    if (static_cast<int>(d.rows()) != nb) throw InconsistentError("matrix size does not match boundary");
    const int m = static_cast<int>(tree.edges.size());
    if (m != tree.vertex_count - 1 || !is_connected(tree))
        throw InconsistentError("topology is not a tree");
    for (int v = 1; v <= tree.vertex_count; ++v)
        if (!tree.is_boundary(v) && tree.degree(v) < 3)
            throw InconsistentError("interior vertex of degree below three");
    // adjacency for path finding
    std::vector<std::vector<std::pair<int, int>>> adj(tree.vertex_count + 1);
    for (int e = 0; e < m; ++e) {
        adj[tree.edges[e].u].push_back({tree.edges[e].v, e});
        adj[tree.edges[e].v].push_back({tree.edges[e].u, e});
    }
    auto path_edges = [&](int s, int t) {
        std::vector<int> parent_edge(tree.vertex_count + 1, -1), parent(tree.vertex_count + 1, 0);
        std::vector<int> stack{s};
        std::vector<char> seen(tree.vertex_count + 1, 0);
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    parent_edge[w] = e;
                    stack.push_back(w);
                }
        }
        std::vector<int> out;
        for (int v = t; v != s; v = parent[v]) out.push_back(parent_edge[v]);
        return out;
    };
    // path incidence system over all boundary pairs
    const int rows = nb * (nb - 1) / 2;
    Mat p(rows, m);
    std::vector<Rational> rhs(rows);
    int r = 0;
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j, ++r) {
            for (int e : path_edges(tree.boundary[i], tree.boundary[j])) p(r, e) = 1;
            rhs[r] = d(i, j);
        }
    bool unique = false;
    const auto sol = solve(p, rhs, &unique);
    if (!sol || !unique)
        throw InconsistentError("distance matrix is not realized by this tree topology");
    WeightedGraph out = tree;
    for (int e = 0; e < m; ++e) {
        if (sign((*sol)[e]) <= 0)
            throw NonPositiveWeightError("fitted edge resistance is not positive");
        out.edges[e].c = 1 / (*sol)[e];
    }
    return out;
}

}  // namespace ohmgraph
