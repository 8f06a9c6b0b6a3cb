#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ohmgraph/arrangement.hpp"
#include "ohmgraph/graph.hpp"
#include "ohmgraph/matrix.hpp"
#include "ohmgraph/plucker.hpp"
#include "ohmgraph/splits.hpp"

namespace ohmgraph {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// matrices (CSV rows of exact scalars; symmetry is validated on load)

inline Mat matrix_from_csv(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::vector<Rational> row;
        std::string cell;
        std::stringstream ss(line);
        while (std::getline(ss, cell, ',')) row.push_back(parse_rational(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw ParseError("matrix is not square");
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    if (!m.is_symmetric()) throw ParseError("matrix is not symmetric");
    return m;
}

inline Mat load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return matrix_from_csv(in);
}

inline std::string matrix_to_csv(const Mat& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

inline Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// networks

inline Rational scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw ParseError("conductance must be an integer or a 'p/q' / decimal string");
}

inline WeightedGraph network_from_json(const Json& j) {
    WeightedGraph g;
    if (!j.is_object() || !j.contains("n") || !j.contains("boundary") || !j.contains("edges"))
        throw ParseError("network JSON needs n, boundary, edges");
    g.vertex_count = j.at("n").get<int>();
    for (const auto& b : j.at("boundary")) g.boundary.push_back(b.get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.contains("u") || !e.contains("v") || !e.contains("c"))
            throw ParseError("edge needs u, v, c");
        g.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(), scalar_from_json(e.at("c"))});
    }
    if (j.contains("embedding") && !j.at("embedding").is_null()) {
        Embedding emb(g.vertex_count);
        for (const auto& [key, lst] : j.at("embedding").items()) {
            const int v = std::stoi(key);
            if (v < 1 || v > g.vertex_count) throw ParseError("embedding vertex out of range");
            for (const auto& ei : lst) emb[v - 1].push_back(ei.get<int>());
        }
        g.embedding = std::move(emb);
    }
    validate(g);
    return g;
}

inline WeightedGraph load_network_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw ParseError(std::string("bad JSON: ") + ex.what());
    }
    return network_from_json(j);
}

inline Json network_to_json(const WeightedGraph& g) {
    Json j;
    j["n"] = g.vertex_count;
    j["boundary"] = g.boundary;
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"c", to_string(e.c)}});
    j["edges"] = std::move(edges);
    if (g.embedding) {
        Json emb;
        for (int v = 1; v <= g.vertex_count; ++v) emb[std::to_string(v)] = (*g.embedding)[v - 1];
        j["embedding"] = std::move(emb);
    }
    return j;
}

// ---------------------------------------------------------------------------
// split systems: {"order": [...], "splits": [{"A": [...], "B": [...], "w": "p/q"}]}

inline WeightedSplitSystem split_system_from_json(const Json& j) {
    WeightedSplitSystem sys;
    if (!j.is_object() || !j.contains("order") || !j.contains("splits"))
        throw ParseError("split system JSON needs order and splits");
    for (const auto& v : j.at("order")) sys.order.push_back(v.get<int>());
    sys.n = static_cast<int>(sys.order.size());
    if (!is_valid_order(sys.order, sys.n)) throw ParseError("order is not a permutation of 1..n");
    for (const auto& item : j.at("splits")) {
        std::vector<int> a, b;
        for (const auto& v : item.at("A")) a.push_back(v.get<int>());
        for (const auto& v : item.at("B")) b.push_back(v.get<int>());
        const Rational w = scalar_from_json(item.at("w"));
        if (sign(w) <= 0) throw ParseError("split weight must be positive");
        Split s = Split::of(std::move(a), std::move(b));
        validate(s, sys.n);
        sys.items.push_back({std::move(s), w});
    }
    return sys;
}

inline Json split_system_to_json(const WeightedSplitSystem& sys) {
    Json j;
    j["order"] = sys.order;
    Json splits = Json::array();
    for (const auto& [s, w] : sys.items)
        splits.push_back({{"A", s.a}, {"B", s.b}, {"w", to_string(w)}});
    j["splits"] = std::move(splits);
    return j;
}

inline WeightedSplitSystem load_split_system_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw ParseError(std::string("bad JSON: ") + ex.what());
    }
    return split_system_from_json(j);
}

// ---------------------------------------------------------------------------
// plucker vectors

inline std::string subset_key(const std::vector<int>& key) {
    std::string s;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(key[i]);
    }
    return s;
}

inline Json plucker_to_json(const PluckerVector& p, const SignCertificate* cert = nullptr) {
    Json j;
    j["n"] = p.n;
    j["deleted_row"] = p.deleted_row;
    Json coords;
    for (const auto& [key, v] : p.coords) coords[subset_key(key)] = to_string(v);
    j["coords"] = std::move(coords);
    if (cert) {
        j["sign"] = cert->to_symbol();
        Json witness = Json::array();
        if (!cert->nonnegative()) {
            witness.push_back(cert->positive_witness);
            witness.push_back(cert->negative_witness);
        }
        j["witness"] = std::move(witness);
    }
    return j;
}

// ---------------------------------------------------------------------------
// DOT export

inline std::string network_to_dot(const WeightedGraph& g) {
    std::string out = "graph network {\n  node [shape=circle];\n";
    for (int b : g.boundary)
        out += "  v" + std::to_string(b) + " [style=filled, fillcolor=lightgray, label=\"" +
               std::to_string(b) + "\"];\n";
    for (int v = 1; v <= g.vertex_count; ++v)
        if (!g.is_boundary(v))
            out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
    for (const auto& e : g.edges)
        out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + " [label=\"" +
               to_string(e.c) + "\"];\n";
    out += "}\n";
    return out;
}

inline std::string arrangement_to_dot(const ChordArrangement& arr) {
    std::string out = "graph medial {\n  node [shape=point];\n";
    for (int v = 1; v <= arr.vertex_count; ++v) {
        const auto& [x, y] = arr.positions[v - 1];
        out += "  m" + std::to_string(v) + " [pos=\"" + std::to_string(x) + "," +
               std::to_string(y) + "!\"" + (v <= arr.n2 ? ", shape=circle, label=\"" +
               std::to_string(v) + "\"" : "") + "];\n";
    }
    for (const auto& s : arr.segments)
        out += "  m" + std::to_string(s.u) + " -- m" + std::to_string(s.v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace ohmgraph
