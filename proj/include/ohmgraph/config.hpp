#pragma once

#include <fstream>
#include <string>

#include "ohmgraph/errors.hpp"
#include "ohmgraph/metrics.hpp"
#include "ohmgraph/plucker.hpp"
#include "ohmgraph/resistance.hpp"

namespace ohmgraph {

enum class OutputFormat { json, csv, dot };

struct Config {
    int plucker_n_cap = kPluckerNodeCap;
    int order_search_cap = kOrderSearchCap;
    int spanning_tree_edge_cap = kSpanningTreeEdgeCap;
    OutputFormat format = OutputFormat::json;
    // default input paths, overridden by the corresponding CLI options
    std::string metric_path, network_path, response_path, splits_path, tree_path;
};

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "dot") return OutputFormat::dot;
    throw ParseError("unknown format '" + s + "' (expected json, csv, or dot)");
}

/// key=value lines; '#' starts a comment; unknown keys are rejected.
inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config " + path);
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const auto b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r\n");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + " is not key=value");
        auto trim = [](std::string s) {
            const auto x = s.find_first_not_of(" \t");
            const auto y = s.find_last_not_of(" \t");
            return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto positive_int = [&](const std::string& v) {
            std::size_t used = 0;
            const int x = std::stoi(v, &used);
            if (used != v.size() || x <= 0)
                throw ParseError("config key " + key + " needs a positive integer");
            return x;
        };
        if (key == "plucker_n_cap")
            cfg.plucker_n_cap = positive_int(value);
        else if (key == "order_search_cap")
            cfg.order_search_cap = positive_int(value);
        else if (key == "spanning_tree_edge_cap")
            cfg.spanning_tree_edge_cap = positive_int(value);
        else if (key == "format")
            cfg.format = parse_format(value);
        else if (key == "metric")
            cfg.metric_path = value;
        else if (key == "network")
            cfg.network_path = value;
        else if (key == "response")
            cfg.response_path = value;
        else if (key == "splits")
            cfg.splits_path = value;
        else if (key == "tree")
            cfg.tree_path = value;
        else
            throw ParseError("unknown config key '" + key + "'");
    }
    return cfg;
}

}  // namespace ohmgraph
