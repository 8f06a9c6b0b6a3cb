#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "ohmgraph/graph.hpp"

namespace ohmgraph {

namespace detail {

/// Dart (directed edge occurrence). edge >= first_arc marks a boundary-circle arc.
struct Dart {
    int from = 0, to = 0, edge = 0;
    bool operator<(const Dart& o) const {
        return std::tie(from, to, edge) < std::tie(o.from, o.to, o.edge);
    }
    bool operator==(const Dart& o) const {
        return from == o.from && to == o.to && edge == o.edge;
    }
};

struct FaceSet {
    std::vector<std::vector<Dart>> faces;
    int outer = -1;  // index into faces
};

/// Traces the faces of a rotation system. The successor of dart (u -> v) is the
/// dart after (v -> u) in v's clockwise rotation.
inline FaceSet trace_faces(const std::map<int, std::vector<Dart>>& rot) {
    std::map<Dart, std::pair<int, int>> pos;  // dart -> (vertex, index in rotation)
    for (const auto& [v, lst] : rot)
        for (std::size_t i = 0; i < lst.size(); ++i) pos[lst[i]] = {v, static_cast<int>(i)};
    FaceSet out;
    std::map<Dart, char> seen;
    for (const auto& [v, lst] : rot) {
        for (const auto& d0 : lst) {
            if (seen.count(d0)) continue;
            std::vector<Dart> face;
            Dart d = d0;
            while (!seen.count(d)) {
                seen[d] = 1;
                face.push_back(d);
                const Dart rev{d.to, d.from, d.edge};
                const auto it = pos.find(rev);
                if (it == pos.end()) throw NotPlanarError("rotation system is not closed");
                const auto& [vv, idx] = it->second;
                const auto& l = rot.at(vv);
                d = l[(idx + 1) % l.size()];
            }
            out.faces.push_back(std::move(face));
        }
    }
    return out;
}

}  // namespace detail

/// Planar dual of a connected circular network with an embedding. Dual node k
/// sits on the circle between primal nodes k and k+1 and each dual conductance
/// is the reciprocal of its primal edge's. The dual comes with its own embedding.
inline WeightedGraph dual_network(const WeightedGraph& g) {
    using detail::Dart;
    if (!g.embedding) throw NotEmbeddedError("dual requires a planar embedding");
    if (!is_connected(g)) throw DisconnectedError("dual requires a connected network");
    const int nb = g.n();
    const int m = static_cast<int>(g.edges.size());
    if (nb < 2) throw NotEmbeddedError("dual requires at least two boundary nodes");

    // rotations as darts; arc k joins boundary[k] -> boundary[k+1] with edge id m+k.
    // At boundary[k] the arc toward the next node comes first, the arc toward the
    // previous node last; the stored embedding list sits between them.
    std::map<int, std::vector<Dart>> rot;
    for (int v = 1; v <= g.vertex_count; ++v) {
        auto& lst = rot[v];
        for (int ei : (*g.embedding)[v - 1]) {
            const auto& e = g.edges[ei];
            const int w = e.u == v ? e.v : e.u;
            lst.push_back({v, w, ei});
        }
        if (g.edges.size() > 0 && lst.empty() && !g.is_boundary(v))
            throw DisconnectedError("isolated interior vertex");
    }
    for (int k = 0; k < nb; ++k) {
        const int u = g.boundary[k];
        const int v = g.boundary[(k + 1) % nb];
        rot[u].insert(rot[u].begin(), {u, v, m + k});
        rot[v].push_back({v, u, m + k});
    }

    auto fs = detail::trace_faces(rot);
    // outer face: traverses the arcs forward
    for (std::size_t i = 0; i < fs.faces.size(); ++i) {
        for (const auto& d : fs.faces[i])
            if (d.edge == m && d.from == g.boundary[0]) fs.outer = static_cast<int>(i);
    }
    if (fs.outer < 0) throw NotPlanarError("outer face not found");
    for (const auto& d : fs.faces[fs.outer])
        if (d.edge < m) throw NotPlanarError("outer face crosses a graph edge");
    const int euler = g.vertex_count - (m + nb) + static_cast<int>(fs.faces.size());
    if (euler != 2) throw NotPlanarError("rotation system violates the Euler formula");

    // inner faces -> dual vertices; the face holding arc k becomes dual node k+1
    std::vector<int> inner;
    for (std::size_t i = 0; i < fs.faces.size(); ++i)
        if (static_cast<int>(i) != fs.outer) inner.push_back(static_cast<int>(i));
    std::map<int, int> arc_face;  // arc k -> face index
    std::map<int, int> dual_id;   // face index -> dual vertex id
    for (int fi : inner) {
        int arcs = 0, arck = -1;
        for (const auto& d : fs.faces[fi])
            if (d.edge >= m) {
                ++arcs;
                arck = d.edge - m;
            }
        if (arcs > 1) throw NotPlanarError("a face meets several boundary arcs (cactus degeneration)");
        if (arcs == 1) arc_face[arck] = fi;
    }
    for (int k = 0; k < nb; ++k)
        if (!arc_face.count(k)) throw NotPlanarError("boundary arc without a face");
    WeightedGraph dual;
    dual.vertex_count = static_cast<int>(inner.size());
    for (int k = 0; k < nb; ++k) {
        dual_id[arc_face[k]] = k + 1;
        dual.boundary.push_back(k + 1);
    }
    int next = nb;
    for (int fi : inner)
        if (!dual_id.count(fi)) dual_id[fi] = ++next;

    std::map<Dart, int> dart_face;
    for (int fi : inner)
        for (const auto& d : fs.faces[fi]) dart_face[d] = fi;
    dual.edges.reserve(m);
    for (int ei = 0; ei < m; ++ei) {
        const auto& e = g.edges[ei];
        const auto f1 = dart_face.find({e.u, e.v, ei});
        const auto f2 = dart_face.find({e.v, e.u, ei});
        if (f1 == dart_face.end() || f2 == dart_face.end())
            throw NotPlanarError("graph edge borders the outer face");
        dual.edges.push_back({dual_id[f1->second], dual_id[f2->second], 1 / e.c});
    }

    // dual embedding: rotate each face so its arc dart comes last, then the
    // clockwise rotation at the dual vertex is the reversed dart sequence
    Embedding emb(dual.vertex_count);
    for (int fi : inner) {
        auto face = fs.faces[fi];
        auto arc_it = std::find_if(face.begin(), face.end(),
                                   [&](const Dart& d) { return d.edge >= m; });
        if (arc_it != face.end()) std::rotate(face.begin(), arc_it + 1, face.end());
        std::vector<int> lst;
        for (auto it = face.rbegin(); it != face.rend(); ++it)
            if (it->edge < m) lst.push_back(it->edge);
        emb[dual_id[fi] - 1] = std::move(lst);
    }
    dual.embedding = std::move(emb);
    return dual;
}

}  // namespace ohmgraph
