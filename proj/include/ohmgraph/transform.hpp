#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "ohmgraph/graph.hpp"

namespace ohmgraph {

enum class Move {
    remove_loop,      // site: {edge index}
    remove_pendant,   // site: {interior vertex id}
    series,           // site: {interior vertex id of degree 2}
    parallel,         // site: {edge index, edge index}
    star_to_triangle, // site: {interior vertex id of degree 3}
    triangle_to_star, // site: {vertex id, vertex id, vertex id}
};

using Site = std::vector<int>;

namespace detail {

inline WeightedGraph drop_vertices(const WeightedGraph& g, const std::vector<int>& victims) {
    std::vector<char> dead(static_cast<std::size_t>(g.vertex_count) + 1, 0);
    for (int v : victims) dead[v] = 1;
    std::vector<int> relabel(g.vertex_count + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.vertex_count; ++v)
        if (!dead[v]) relabel[v] = ++next;
    WeightedGraph out;
    out.vertex_count = next;
    for (int b : g.boundary) out.boundary.push_back(relabel[b]);
    for (const auto& e : g.edges)
        if (!dead[e.u] && !dead[e.v]) out.edges.push_back({relabel[e.u], relabel[e.v], e.c});
    return out;
}

inline std::vector<int> incident_edges(const WeightedGraph& g, int v) {
    std::vector<int> out;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i].u == v || g.edges[i].v == v) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace detail

/// One electrical transformation. Every move preserves the response matrix
/// exactly; the output carries no embedding.
inline WeightedGraph transform(const WeightedGraph& g, Move move, const Site& site) {
    WeightedGraph out = g;
    out.embedding.reset();
    switch (move) {
        case Move::remove_loop: {
            if (site.size() != 1 || site[0] < 0 || site[0] >= static_cast<int>(g.edges.size()))
                throw BadSiteError("remove_loop needs one edge index");
            const auto& e = g.edges[site[0]];
            if (e.u != e.v) throw BadSiteError("edge is not a loop");
            out.edges.erase(out.edges.begin() + site[0]);
            return out;
        }
        case Move::remove_pendant: {
            if (site.size() != 1) throw BadSiteError("remove_pendant needs one vertex id");
            const int v = site[0];
            if (v < 1 || v > g.vertex_count || g.is_boundary(v))
                throw BadSiteError("pendant vertex must be interior");
            const auto inc = detail::incident_edges(g, v);
            if (inc.size() != 1 || g.edges[inc[0]].u == g.edges[inc[0]].v)
                throw BadSiteError("vertex is not a pendant");
            out.edges.erase(out.edges.begin() + inc[0]);
            return detail::drop_vertices(out, {v});
        }
        case Move::series: {
            if (site.size() != 1) throw BadSiteError("series needs one vertex id");
            const int v = site[0];
            if (v < 1 || v > g.vertex_count || g.is_boundary(v))
                throw BadSiteError("series vertex must be interior");
            const auto inc = detail::incident_edges(g, v);
            if (inc.size() != 2) throw BadSiteError("vertex does not have exactly two edges");
            const auto& e1 = g.edges[inc[0]];
            const auto& e2 = g.edges[inc[1]];
            if (e1.u == e1.v || e2.u == e2.v) throw BadSiteError("series pattern excludes loops");
            const int a = e1.u == v ? e1.v : e1.u;
            const int b = e2.u == v ? e2.v : e2.u;
            const Rational c = (e1.c * e2.c) / (e1.c + e2.c);
            out.edges.erase(out.edges.begin() + std::max(inc[0], inc[1]));
            out.edges.erase(out.edges.begin() + std::min(inc[0], inc[1]));
            out.edges.push_back({a, b, c});
            return detail::drop_vertices(out, {v});
        }
        case Move::parallel: {
            if (site.size() != 2) throw BadSiteError("parallel needs two edge indices");
            const int i = site[0], j = site[1];
            if (i == j || i < 0 || j < 0 || i >= static_cast<int>(g.edges.size()) ||
                j >= static_cast<int>(g.edges.size()))
                throw BadSiteError("parallel needs two distinct edge indices");
            const auto& e1 = g.edges[i];
            const auto& e2 = g.edges[j];
            const bool same = (e1.u == e2.u && e1.v == e2.v) || (e1.u == e2.v && e1.v == e2.u);
            if (!same || e1.u == e1.v) throw BadSiteError("edges are not a parallel pair");
            out.edges[std::min(i, j)].c = e1.c + e2.c;
            out.edges.erase(out.edges.begin() + std::max(i, j));
            return out;
        }
        case Move::star_to_triangle: {
            if (site.size() != 1) throw BadSiteError("star_to_triangle needs one vertex id");
            const int v = site[0];
            if (v < 1 || v > g.vertex_count || g.is_boundary(v))
                throw BadSiteError("star center must be interior");
            const auto inc = detail::incident_edges(g, v);
            if (inc.size() != 3) throw BadSiteError("vertex does not have exactly three edges");
            std::array<int, 3> nb{};
            std::array<Rational, 3> leg{};
            for (int t = 0; t < 3; ++t) {
                const auto& e = g.edges[inc[t]];
                if (e.u == e.v) throw BadSiteError("star pattern excludes loops");
                nb[t] = e.u == v ? e.v : e.u;
                leg[t] = e.c;
            }
            if (nb[0] == nb[1] || nb[1] == nb[2] || nb[0] == nb[2])
                throw BadSiteError("star legs must reach three distinct vertices");
            const Rational s = leg[0] + leg[1] + leg[2];
            for (int t = 2; t >= 0; --t) out.edges.erase(out.edges.begin() + inc[t]);
            out.edges.push_back({nb[0], nb[1], leg[0] * leg[1] / s});
            out.edges.push_back({nb[1], nb[2], leg[1] * leg[2] / s});
            out.edges.push_back({nb[2], nb[0], leg[2] * leg[0] / s});
            return detail::drop_vertices(out, {v});
        }
        case Move::triangle_to_star: {
            if (site.size() != 3) throw BadSiteError("triangle_to_star needs three vertex ids");
            const int a = site[0], b = site[1], c = site[2];
            if (a == b || b == c || a == c) throw BadSiteError("triangle vertices must be distinct");
            auto find_edge = [&](int x, int y) -> int {
                for (std::size_t i = 0; i < g.edges.size(); ++i) {
                    const auto& e = g.edges[i];
                    if ((e.u == x && e.v == y) || (e.u == y && e.v == x))
                        return static_cast<int>(i);
                }
                return -1;
            };
            const int eab = find_edge(a, b), ebc = find_edge(b, c), eca = find_edge(c, a);
            if (eab < 0 || ebc < 0 || eca < 0) throw BadSiteError("no triangle on these vertices");
            const Rational cab = g.edges[eab].c, cbc = g.edges[ebc].c, cca = g.edges[eca].c;
            const Rational sigma = cab * cbc + cbc * cca + cca * cab;
            std::vector<int> idx = {eab, ebc, eca};
            std::sort(idx.rbegin(), idx.rend());
            for (int i : idx) out.edges.erase(out.edges.begin() + i);
            out.vertex_count += 1;
            const int center = out.vertex_count;
            out.edges.push_back({a, center, sigma / cbc});
            out.edges.push_back({b, center, sigma / cca});
            out.edges.push_back({c, center, sigma / cab});
            return out;
        }
    }
    throw BadSiteError("unknown move");
}

/// Reduces loops, interior pendants, interior series vertices, and parallel
/// pairs to a fixpoint, in that priority. Interior vertices left with no edges
/// are dropped as well. The response matrix is preserved exactly.
inline WeightedGraph simplify(const WeightedGraph& g) {
    WeightedGraph cur = g;
    cur.embedding.reset();
    bool changed = true;
    while (changed) {
        changed = false;
        // loops
        for (std::size_t i = 0; i < cur.edges.size(); ++i)
            if (cur.edges[i].u == cur.edges[i].v) {
                cur = transform(cur, Move::remove_loop, {static_cast<int>(i)});
                changed = true;
                break;
            }
        if (changed) continue;
        // isolated interior vertices, then pendants
        for (int v = 1; v <= cur.vertex_count; ++v) {
            if (cur.is_boundary(v)) continue;
            const auto inc = detail::incident_edges(cur, v);
            if (inc.empty()) {
                cur = detail::drop_vertices(cur, {v});
                changed = true;
                break;
            }
            if (inc.size() == 1 && cur.edges[inc[0]].u != cur.edges[inc[0]].v) {
                cur = transform(cur, Move::remove_pendant, {v});
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // series
        for (int v = 1; v <= cur.vertex_count; ++v) {
            if (cur.is_boundary(v)) continue;
            const auto inc = detail::incident_edges(cur, v);
            if (inc.size() == 2 && cur.edges[inc[0]].u != cur.edges[inc[0]].v &&
                cur.edges[inc[1]].u != cur.edges[inc[1]].v) {
                cur = transform(cur, Move::series, {v});
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // parallel pairs
        for (std::size_t i = 0; i < cur.edges.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < cur.edges.size() && !changed; ++j) {
                const auto& e1 = cur.edges[i];
                const auto& e2 = cur.edges[j];
                if (e1.u == e1.v) continue;
                if ((e1.u == e2.u && e1.v == e2.v) || (e1.u == e2.v && e1.v == e2.u)) {
                    cur = transform(cur, Move::parallel,
                                    {static_cast<int>(i), static_cast<int>(j)});
                    changed = true;
                }
            }
    }
    return cur;
}

}  // namespace ohmgraph
