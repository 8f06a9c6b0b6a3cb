#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <tuple>
#include <vector>

#include "ohmgraph/dual.hpp"
#include "ohmgraph/graph.hpp"
#include "ohmgraph/strands.hpp"

namespace ohmgraph {

/// Chord diagram of a fixed-point-free involution tau on 2n medial boundary
/// points, realized as straight segments between points in convex position and
/// resolved into a planar arrangement with 2-colored faces. Medial points 2i-1
/// and 2i flank network node i.
struct ChordArrangement {
    int n = 0;   // network nodes
    int n2 = 0;  // medial boundary points
    std::vector<std::pair<int, int>> chords;  // {i, tau(i)}, i < tau(i), sorted

    struct Crossing {
        int chord_a = 0, chord_b = 0;  // indices into chords, a < b
        int vertex = 0;                // arrangement vertex id
    };
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> chord_paths;  // per chord: endpoint, crossings..., endpoint

    // arrangement graph: vertices 1..n2 are medial points, then crossings
    int vertex_count = 0;
    struct Seg {
        int u = 0, v = 0, chord = 0;
    };
    std::vector<Seg> segments;
    std::map<int, std::vector<detail::Dart>> rotations;  // includes circle arcs (edge >= segments)

    std::vector<std::vector<detail::Dart>> faces;
    int outer_face = -1;
    std::vector<int> face_color;  // 1 black, 0 white, -1 outer
    std::vector<int> arc_face;    // arc k (0-based, joins points k+1, k+2) -> face index

    std::vector<std::pair<double, double>> positions;  // per vertex, for export
};

namespace detail {

using Pt = std::pair<Rational, Rational>;

/// Convex position points, clockwise: x increasing on the concave-down curve
/// y = -x^2. The bump deterministically perturbs x to break concurrencies.
inline Pt medial_point(int p, int bump) {
    Rational x = Rational(p) + Rational(1, p + 2 + bump);
    return {x, -x * x};
}

/// True when v1 precedes v2 sweeping counterclockwise from the +x axis.
inline bool ccw_less(const Pt& v1, const Pt& v2) {
    auto half = [](const Pt& v) { return (sign(v.second) > 0 || (v.second == 0 && sign(v.first) > 0)) ? 0 : 1; };
    const int h1 = half(v1), h2 = half(v2);
    if (h1 != h2) return h1 < h2;
    const Rational cr = v1.first * v2.second - v1.second * v2.first;
    return sign(cr) > 0;
}

}  // namespace detail

/// Builds the arrangement of the chords {i, tau(i)}. Deterministic; exact.
inline ChordArrangement build_chord_arrangement(const StrandPermutation& sp) {
    using detail::Dart;
    using detail::Pt;
    const int n2 = static_cast<int>(sp.tau.size());
    if (n2 % 2 != 0 || n2 == 0) throw DegenerateError("tau must act on an even point count");
    ChordArrangement arr;
    arr.n2 = n2;
    arr.n = n2 / 2;
    for (int i = 1; i <= n2; ++i)
        if (i < sp.tau[i - 1]) arr.chords.push_back({i, sp.tau[i - 1]});
    std::sort(arr.chords.begin(), arr.chords.end());
    const int nc = static_cast<int>(arr.chords.size());

    for (int bump = 0; bump < 64; ++bump) {
        std::vector<Pt> pts;
        for (int p = 1; p <= n2; ++p) pts.push_back(detail::medial_point(p, bump));
        // crossings: solve each chord pair exactly
        struct Hit {
            Rational s;  // parameter along chord a
            int other;
            Pt at;
        };
        std::vector<std::vector<Hit>> hits(nc);
        std::vector<std::array<int, 2>> cross_pairs;
        std::vector<Pt> cross_pts;
        bool generic = true;
        for (int a = 0; a < nc && generic; ++a)
            for (int b = a + 1; b < nc && generic; ++b) {
                const Pt A = pts[arr.chords[a].first - 1], B = pts[arr.chords[a].second - 1];
                const Pt C = pts[arr.chords[b].first - 1], D = pts[arr.chords[b].second - 1];
                const Rational ux = B.first - A.first, uy = B.second - A.second;
                const Rational vx = D.first - C.first, vy = D.second - C.second;
                const Rational den = ux * (-vy) + vx * uy;
                if (den == 0) continue;  // parallel chords never cross twice
                const Rational wx = C.first - A.first, wy = C.second - A.second;
                const Rational s = (wx * (-vy) + vx * wy) / den;
                const Rational t = (ux * wy - uy * wx) / den;
                if (!(s > 0 && s < 1 && t > 0 && t < 1)) continue;
                const Pt at{A.first + s * ux, A.second + s * uy};
                const Rational tb = t;
                hits[a].push_back({s, b, at});
                hits[b].push_back({tb, a, at});
                cross_pairs.push_back({a, b});
                cross_pts.push_back(at);
            }
        for (int a = 0; a < nc && generic; ++a) {
            std::sort(hits[a].begin(), hits[a].end(),
                      [](const Hit& x, const Hit& y) { return x.s < y.s; });
            for (std::size_t i = 0; i + 1 < hits[a].size(); ++i)
                if (hits[a][i].s == hits[a][i + 1].s) generic = false;
        }
        if (!generic) continue;

        // vertices: medial points 1..n2, crossings after
        arr.vertex_count = n2 + static_cast<int>(cross_pairs.size());
        std::map<std::pair<int, int>, int> xid;
        for (std::size_t i = 0; i < cross_pairs.size(); ++i) {
            const int v = n2 + static_cast<int>(i) + 1;
            xid[{cross_pairs[i][0], cross_pairs[i][1]}] = v;
            arr.crossings.push_back({cross_pairs[i][0], cross_pairs[i][1], v});
        }
        std::vector<Pt> pos(arr.vertex_count);
        for (int p = 0; p < n2; ++p) pos[p] = pts[p];
        for (std::size_t i = 0; i < cross_pts.size(); ++i) pos[n2 + i] = cross_pts[i];

        arr.chord_paths.assign(nc, {});
        for (int a = 0; a < nc; ++a) {
            auto& path = arr.chord_paths[a];
            path.push_back(arr.chords[a].first);
            for (const auto& h : hits[a]) {
                const int b = h.other;
                path.push_back(xid[{std::min(a, b), std::max(a, b)}]);
            }
            path.push_back(arr.chords[a].second);
        }
        arr.segments.clear();
        std::map<std::pair<int, int>, int> seg_of;
        for (int a = 0; a < nc; ++a) {
            const auto& path = arr.chord_paths[a];
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                const int id = static_cast<int>(arr.segments.size());
                arr.segments.push_back({path[i], path[i + 1], a});
                seg_of[{path[i], path[i + 1]}] = id;
                seg_of[{path[i + 1], path[i]}] = id;
            }
        }
        // clockwise rotations by exact angular sort
        arr.rotations.clear();
        std::vector<std::vector<int>> nbrs(arr.vertex_count + 1);
        for (const auto& s : arr.segments) {
            nbrs[s.u].push_back(s.v);
            nbrs[s.v].push_back(s.u);
        }
        for (int v = 1; v <= arr.vertex_count; ++v) {
            auto lst = nbrs[v];
            std::sort(lst.begin(), lst.end(), [&](int w1, int w2) {
                const Pt d1{pos[w1 - 1].first - pos[v - 1].first, pos[w1 - 1].second - pos[v - 1].second};
                const Pt d2{pos[w2 - 1].first - pos[v - 1].first, pos[w2 - 1].second - pos[v - 1].second};
                return detail::ccw_less(d1, d2);
            });
            std::reverse(lst.begin(), lst.end());  // clockwise
            auto& rot = arr.rotations[v];
            for (int w : lst) rot.push_back({v, w, seg_of[{v, w}]});
        }
        // circle arcs: arc k joins medial point k+1 -> k+2 (wrapping), id = segments + k.
        // The medial points are in clockwise convex position, so at point p the
        // arc toward the next point precedes the chord and the arc toward the
        // previous point follows it.
        const int m = static_cast<int>(arr.segments.size());
        for (int k = 0; k < n2; ++k) {
            const int u = k + 1, v = k % n2 + 2 > n2 ? 1 : k + 2;
            arr.rotations[u].insert(arr.rotations[u].begin(), {u, v, m + k});
            arr.rotations[v].push_back({v, u, m + k});
        }
        auto fs = detail::trace_faces(arr.rotations);
        arr.faces = fs.faces;
        arr.outer_face = -1;
        for (std::size_t i = 0; i < arr.faces.size(); ++i)
            for (const auto& d : arr.faces[i])
                if (d.edge == m && d.from == 1) arr.outer_face = static_cast<int>(i);
        if (arr.outer_face < 0) throw NotPlanarError("outer face not found");
        for (const auto& d : arr.faces[arr.outer_face])
            if (d.edge < m) throw NotPlanarError("outer face crosses a chord");
        if (arr.vertex_count - (m + n2) + static_cast<int>(arr.faces.size()) != 2)
            throw NotPlanarError("arrangement violates the Euler formula");

        // 2-color faces across chord segments
        std::map<Dart, int> dart_face;
        for (std::size_t fi = 0; fi < arr.faces.size(); ++fi)
            for (const auto& d : arr.faces[fi]) dart_face[d] = static_cast<int>(fi);
        arr.arc_face.assign(n2, -1);
        for (std::size_t fi = 0; fi < arr.faces.size(); ++fi) {
            if (static_cast<int>(fi) == arr.outer_face) continue;
            for (const auto& d : arr.faces[fi])
                if (d.edge >= m) arr.arc_face[d.edge - m] = static_cast<int>(fi);
        }
        for (int k = 0; k < n2; ++k)
            if (arr.arc_face[k] < 0) throw NotPlanarError("boundary arc without inner face");
        arr.face_color.assign(arr.faces.size(), -2);
        arr.face_color[arr.outer_face] = -1;
        std::queue<int> bfs;
        arr.face_color[arr.arc_face[0]] = 1;  // face of the node-1 arc is black
        bfs.push(arr.arc_face[0]);
        while (!bfs.empty()) {
            const int f0 = bfs.front();
            bfs.pop();
            for (const auto& d : arr.faces[f0]) {
                if (d.edge >= m) continue;
                const Dart rev{d.to, d.from, d.edge};
                const int f1 = dart_face.at(rev);
                if (f1 == arr.outer_face) throw NotPlanarError("chord segment on the outer face");
                if (arr.face_color[f1] == -2) {
                    arr.face_color[f1] = 1 - arr.face_color[f0];
                    bfs.push(f1);
                } else if (arr.face_color[f1] != 1 - arr.face_color[f0]) {
                    throw ColoringFailureError("face 2-coloring is improper (lens)");
                }
            }
        }
        for (std::size_t fi = 0; fi < arr.faces.size(); ++fi)
            if (arr.face_color[fi] == -2)
                throw ColoringFailureError("arrangement face unreachable from the boundary");
        // node arcs must be black, spacer arcs white
        for (int k = 0; k < n2; ++k) {
            const int want = k % 2 == 0 ? 1 : 0;
            if (arr.face_color[arr.arc_face[k]] != want)
                throw ColoringFailureError("boundary arc face has the wrong color");
        }
        arr.positions.resize(arr.vertex_count);
        for (int v = 0; v < arr.vertex_count; ++v)
            arr.positions[v] = {pos[v].first.get_d(), pos[v].second.get_d()};
        return arr;
    }
    throw DegenerateError("could not reach general position");
}

/// Recovers the unit-conductance network: black faces become vertices (the face
/// at node i's arc is boundary vertex i), each crossing joins its two black
/// corner faces. The output carries the embedding induced by the face cycles.
inline WeightedGraph arrangement_to_network(const ChordArrangement& arr) {
    using detail::Dart;
    const int m = static_cast<int>(arr.segments.size());
    const int n = arr.n;
    // face -> network vertex id; node faces first
    std::map<int, int> vid;
    for (int i = 0; i < n; ++i) {
        const int fi = arr.arc_face[2 * i];
        if (vid.count(fi))
            throw BoundaryDegenerateError("two boundary nodes share a face (glued nodes)");
        vid[fi] = i + 1;
    }
    int next = n;
    for (std::size_t fi = 0; fi < arr.faces.size(); ++fi)
        if (arr.face_color[fi] == 1 && !vid.count(static_cast<int>(fi))) {
            vid[static_cast<int>(fi)] = ++next;
        }

    std::map<Dart, int> dart_face;
    for (std::size_t fi = 0; fi < arr.faces.size(); ++fi)
        for (const auto& d : arr.faces[fi]) dart_face[d] = static_cast<int>(fi);

    WeightedGraph g;
    g.vertex_count = next;
    for (int i = 1; i <= n; ++i) g.boundary.push_back(i);

    // each crossing: the two black corner faces, joined by a unit edge
    std::map<int, int> edge_of_crossing;  // crossing vertex -> edge index
    for (const auto& cr : arr.crossings) {
        std::vector<int> black;
        for (const auto& d : arr.rotations.at(cr.vertex)) {
            if (d.edge >= m) continue;
            const int f = dart_face.at(d);
            if (arr.face_color[f] == 1) black.push_back(f);
            const int f2 = dart_face.at(Dart{d.to, d.from, d.edge});
            if (arr.face_color[f2] == 1) black.push_back(f2);
        }
        std::sort(black.begin(), black.end());
        black.erase(std::unique(black.begin(), black.end()), black.end());
        if (black.size() != 2)
            throw ColoringFailureError("crossing without two distinct black corners");
        edge_of_crossing[cr.vertex] = static_cast<int>(g.edges.size());
        g.edges.push_back({vid.at(black[0]), vid.at(black[1]), Rational(1)});
    }
    if (g.edges.empty() && n > 1)
        throw BoundaryDegenerateError("empty medial core: no crossings, nodes are isolated");
    if (!is_connected(g))
        throw BoundaryDegenerateError("recovered network is disconnected (cactus boundary case)");

    // embedding: around each black face, crossings in face order; rotate the
    // node faces so the boundary arc comes last, then reverse for clockwise
    Embedding emb(g.vertex_count);
    for (const auto& [fi, v] : vid) {
        auto face = arr.faces[fi];
        auto arc_it = std::find_if(face.begin(), face.end(),
                                   [&](const Dart& d) { return d.edge >= m; });
        if (arc_it != face.end()) std::rotate(face.begin(), arc_it + 1, face.end());
        std::vector<int> lst;
        for (auto it = face.rbegin(); it != face.rend(); ++it) {
            if (it->edge >= m) continue;
            // the crossing corner between consecutive darts of the face: the
            // dart's head is a crossing vertex exactly when an edge sits there
            const int corner = it->to;
            if (corner > arr.n2) lst.push_back(edge_of_crossing.at(corner));
        }
        emb[v - 1] = std::move(lst);
    }
    g.embedding = std::move(emb);
    validate(g);
    return g;
}

}  // namespace ohmgraph
