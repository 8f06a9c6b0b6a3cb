// ohmgraph: circular planar electrical networks, Kalmanson metrics, and
// network reconstruction from resistance data.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ohmgraph/ohmgraph.hpp"

namespace og = ohmgraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

struct CommonArgs {
    std::string config_path;
    std::string format;
    std::string metric_path;
    std::string network_path;
    std::string response_path;
    std::string splits_path;
    std::string tree_path;
    std::string order_text;
    std::string pair_text;
    std::string coord_text;
    std::string dot_network_path;
    std::string dot_medial_path;
    int base = 0;
    bool pseudo = false;
};

og::Config effective_config(const CommonArgs& args) {
    og::Config cfg;
    if (!args.config_path.empty()) cfg = og::load_config(args.config_path);
    if (!args.format.empty()) cfg.format = og::parse_format(args.format);
    return cfg;
}

/// config-file paths serve as defaults for absent CLI options
void merge_config_defaults(CommonArgs& args) {
    if (args.config_path.empty()) return;
    const og::Config cfg = og::load_config(args.config_path);
    if (args.metric_path.empty()) args.metric_path = cfg.metric_path;
    if (args.network_path.empty()) args.network_path = cfg.network_path;
    if (args.response_path.empty()) args.response_path = cfg.response_path;
    if (args.splits_path.empty()) args.splits_path = cfg.splits_path;
    if (args.tree_path.empty()) args.tree_path = cfg.tree_path;
}

void require_path(const std::string& path, const char* flag) {
    if (path.empty()) throw og::ParseError(std::string("missing ") + flag);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw og::ParseError("empty entry in list '" + text + "'");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return out;
}

og::CircularOrder order_for(const CommonArgs& args, int n) {
    if (args.order_text.empty()) return og::identity_order(n);
    const auto order = parse_int_list(args.order_text);
    if (!og::is_valid_order(order, n))
        throw og::ParseError("--order must be a permutation of 1.." + std::to_string(n));
    return order;
}

void emit(const og::Json& j) { std::cout << j.dump(2) << "\n"; }

void emit_matrix(const og::Mat& m, const og::Config& cfg, const char* json_field = "matrix") {
    if (cfg.format == og::OutputFormat::csv) {
        std::cout << og::matrix_to_csv(m);
    } else {
        og::Json j;
        j[json_field] = og::matrix_to_json(m);
        emit(j);
    }
}

og::Json tau_json(const og::StrandPermutation& sp) {
    og::Json pairs = og::Json::array();
    for (const auto& [a, b] : sp.pairs()) pairs.push_back({a, b});
    return pairs;
}

og::Json metric_report_json(const og::MetricReport& rep) {
    og::Json j;
    j["ok"] = rep.ok();
    if (!rep.asymmetric.empty()) j["asymmetric"] = rep.asymmetric;
    if (!rep.nonzero_diagonal.empty()) j["nonzero_diagonal"] = rep.nonzero_diagonal;
    if (!rep.negative.empty()) j["negative"] = rep.negative;
    if (!rep.zero_off_diagonal.empty()) j["zero_off_diagonal"] = rep.zero_off_diagonal;
    if (!rep.triangles.empty()) {
        og::Json t = og::Json::array();
        for (const auto& v : rep.triangles)
            t.push_back({{"triple", {v.i, v.j, v.k}},
                         {"lhs", og::to_string(v.lhs)},
                         {"rhs", og::to_string(v.rhs)}});
        j["triangle_violations"] = std::move(t);
    }
    return j;
}

int require_metric(const og::Mat& d, bool pseudo, og::Json& out) {
    const auto rep = og::check_metric(d, pseudo);
    if (rep.ok()) return kExitOk;
    out["kalmanson"] = false;
    out["metric_report"] = metric_report_json(rep);
    return kExitPropertyFails;
}

// ---------------------------------------------------------------------------

int cmd_response(const CommonArgs& args) {
    require_path(args.network_path, "--network");
    const auto g = og::load_network_json(args.network_path);
    emit_matrix(og::response_matrix(g), effective_config(args), "response");
    return kExitOk;
}

int cmd_resistance(const CommonArgs& args) {
    require_path(args.network_path, "--network");
    const auto g = og::load_network_json(args.network_path);
    emit_matrix(og::resistance_matrix(g), effective_config(args), "resistance");
    return kExitOk;
}

int cmd_oracle_resistance(const CommonArgs& args) {
    require_path(args.network_path, "--network");
    const auto g = og::load_network_json(args.network_path);
    const auto cfg = effective_config(args);
    const auto pair = parse_int_list(args.pair_text);
    if (pair.size() != 2) throw og::ParseError("--pair needs two boundary positions i,j");
    const og::Rational r = og::resistance_oracle(g, pair[0], pair[1], cfg.spanning_tree_edge_cap);
    og::Json j;
    j["i"] = pair[0];
    j["j"] = pair[1];
    j["resistance"] = og::to_string(r);
    emit(j);
    return kExitOk;
}

int cmd_kalmanson(const CommonArgs& args) {
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    og::Json j;
    j["matrix"] = og::matrix_to_json(d);
    if (require_metric(d, args.pseudo, j) != kExitOk) {
        emit(j);
        return kExitPropertyFails;
    }
    const auto res = og::kalmanson_check(d, order);
    j["kalmanson"] = res.ok;
    j["order"] = og::Json(order);
    if (!res.ok) {
        j["witness"] = {{"quadruple", res.quadruple},
                        {"inequality", res.inequality},
                        {"lhs", og::to_string(res.lhs)},
                        {"rhs", og::to_string(res.rhs)}};
        emit(j);
        return kExitPropertyFails;
    }
    emit(j);
    return kExitOk;
}

int cmd_find_order(const CommonArgs& args) {
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto cfg = effective_config(args);
    og::Json j;
    if (require_metric(d, args.pseudo, j) != kExitOk) {
        emit(j);
        return kExitPropertyFails;
    }
    const auto order = og::find_circular_order(d, cfg.order_search_cap);
    j["order"] = order ? og::Json(*order) : og::Json(nullptr);
    emit(j);
    return order ? kExitOk : kExitPropertyFails;
}

int cmd_split_decompose(const CommonArgs& args) {
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    const auto sys = og::split_weights(d, order);
    emit(og::split_system_to_json(sys));
    return kExitOk;
}

int cmd_splits_to_metric(const CommonArgs& args) {
    require_path(args.splits_path, "--splits");
    const auto sys = og::load_split_system_json(args.splits_path);
    emit_matrix(og::metric_from_splits(sys), effective_config(args));
    return kExitOk;
}

int cmd_gromov(const CommonArgs& args) {
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    emit_matrix(og::gromov_transform(d, args.base), effective_config(args), "gromov");
    return kExitOk;
}

int cmd_m_of_d(const CommonArgs& args) {
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    emit_matrix(og::m_of_d(d, order), effective_config(args), "m_of_d");
    return kExitOk;
}

og::OmegaMatrix omega_from_args(const CommonArgs& args) {
    if (!args.response_path.empty()) {
        if (!args.metric_path.empty())
            throw og::ParseError("pass either --metric or --response, not both");
        return og::build_omega_response(og::load_matrix_csv(args.response_path));
    }
    if (args.metric_path.empty()) throw og::ParseError("omega needs --metric or --response");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    return og::build_omega_resistance(d, order);
}

int cmd_omega(const CommonArgs& args) {
    const auto cfg = effective_config(args);
    const auto o = omega_from_args(args);
    if (cfg.format == og::OutputFormat::csv) {
        std::cout << og::matrix_to_csv(o.m);
        return kExitOk;
    }
    og::Json j;
    j["n"] = o.n();
    j["form"] = o.form == og::OmegaForm::response ? "response" : "resistance";
    j["deleted_row"] = o.deleted_row();
    j["matrix"] = og::matrix_to_json(o.m);
    emit(j);
    return kExitOk;
}

int cmd_plucker(const CommonArgs& args) {
    const auto cfg = effective_config(args);
    const auto o = omega_from_args(args);
    if (!args.coord_text.empty()) {
        const auto cols = parse_int_list(args.coord_text);
        og::Json j;
        j["n"] = o.n();
        j["deleted_row"] = o.deleted_row();
        j["coord"] = og::subset_key(cols);
        j["value"] = og::to_string(og::plucker_coordinate(o, cols));
        emit(j);
        return kExitOk;
    }
    const auto p = og::plucker(o, cfg.plucker_n_cap);
    const auto cert = og::certify_nonnegative(p);  // AllZero -> input error
    emit(og::plucker_to_json(p, &cert));
    return kExitOk;
}

int cmd_is_electrical(const CommonArgs& args) {
    const auto cfg = effective_config(args);
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    const auto dec = og::is_electrical_via_grassmannian(d, order, cfg.plucker_n_cap);
    og::Json j;
    j["electrical"] = dec.yes;
    j["order"] = og::Json(order);
    if (dec.indicator) j["indicator"] = og::to_string(*dec.indicator);
    if (dec.yes) {
        j["dual_response"] = og::matrix_to_json(dec.dual_response);
        emit(j);
        return kExitOk;
    }
    j["reason"] = dec.reason;
    if (!dec.negative_witness.empty())
        j["witness"] = {{"positive", dec.positive_witness}, {"negative", dec.negative_witness}};
    emit(j);
    return kExitPropertyFails;
}

int cmd_dual_response(const CommonArgs& args) {
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    const auto dec = og::is_electrical_via_dual(d, order);
    og::Json j;
    j["electrical"] = dec.yes;
    j["order"] = og::Json(order);
    j["dual_response"] = og::matrix_to_json(dec.dual_response);
    if (dec.yes) {
        emit(j);
        return kExitOk;
    }
    j["reason"] = dec.reason;
    if (dec.minor_witness &&
        dec.minor_witness->status == og::CircularMinorResult::Status::negative_minor) {
        j["witness"] = {{"p", dec.minor_witness->witness.p},
                        {"q", dec.minor_witness->witness.q},
                        {"k", dec.minor_witness->k},
                        {"value", og::to_string(dec.minor_witness->value)}};
    }
    emit(j);
    return kExitPropertyFails;
}

int cmd_dualize(const CommonArgs& args) {
    const auto cfg = effective_config(args);
    if (!args.response_path.empty()) {
        const auto x = og::load_matrix_csv(args.response_path);
        const auto order = order_for(args, static_cast<int>(x.rows()));
        emit_matrix(og::resistance_from_dual_response(x, order), cfg, "dual_resistance");
        return kExitOk;
    }
    if (args.network_path.empty()) throw og::ParseError("dualize needs --network or --response");
    const auto g = og::load_network_json(args.network_path);
    const auto dual = og::dual_network(g);
    if (cfg.format == og::OutputFormat::dot)
        std::cout << og::network_to_dot(dual);
    else
        emit(og::network_to_json(dual));
    return kExitOk;
}

int cmd_strands(const CommonArgs& args) {
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    const auto sp = og::strands_of_metric(d, order);
    og::Json j;
    j["g"] = sp.g;
    j["tau"] = tau_json(sp);
    emit(j);
    return kExitOk;
}

int cmd_reconstruct(const CommonArgs& args) {
    const auto cfg = effective_config(args);
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    const auto sp = og::strands_of_metric(d, order);
    const auto net = og::reconstruct_topology(d, order, cfg.plucker_n_cap);
    const bool round_trip = og::strands_of_network(net).tau == sp.tau;
    og::Json j;
    j["g"] = sp.g;
    j["tau"] = tau_json(sp);
    j["network"] = og::network_to_json(net);
    j["tree"] = og::Json(nullptr);
    try {
        const auto topo = og::triangles_to_stars(net);
        if (topo.edges.size() + 1 == static_cast<std::size_t>(topo.vertex_count))
            j["tree"] = og::network_to_json(og::fit_tree_weights(topo, d));
    } catch (const og::Error&) {
        // not tree-realizable; the reconstruction itself still stands
    }
    j["round_trip"] = round_trip;
    if (!args.dot_network_path.empty()) {
        std::ofstream out(args.dot_network_path);
        out << og::network_to_dot(net);
    }
    if (!args.dot_medial_path.empty()) {
        std::ofstream out(args.dot_medial_path);
        out << og::arrangement_to_dot(og::build_chord_arrangement(sp));
    }
    emit(j);
    return round_trip ? kExitOk : kExitPropertyFails;
}

int cmd_fit_tree(const CommonArgs& args) {
    require_path(args.tree_path, "--tree");
    require_path(args.metric_path, "--metric");
    const auto tree = og::load_network_json(args.tree_path);
    const auto d = og::load_matrix_csv(args.metric_path);
    emit(og::network_to_json(og::fit_tree_weights(tree, d)));
    return kExitOk;
}

int cmd_reduce(const CommonArgs& args) {
    const auto cfg = effective_config(args);
    require_path(args.network_path, "--network");
    const auto g = og::load_network_json(args.network_path);
    const auto s = og::simplify(g);
    if (cfg.format == og::OutputFormat::dot)
        std::cout << og::network_to_dot(s);
    else
        emit(og::network_to_json(s));
    return kExitOk;
}

int cmd_verify(const CommonArgs& args) {
    const auto cfg = effective_config(args);
    require_path(args.metric_path, "--metric");
    const auto d = og::load_matrix_csv(args.metric_path);
    const auto order = order_for(args, static_cast<int>(d.rows()));
    og::Json j;
    const auto viaGr = og::is_electrical_via_grassmannian(d, order, cfg.plucker_n_cap);
    const auto viaDual = og::is_electrical_via_dual(d, order);
    j["grassmannian"] = viaGr.yes;
    j["dual"] = viaDual.yes;
    j["detectors_agree"] = viaGr.yes == viaDual.yes;
    if (!viaGr.yes || !viaDual.yes) {
        j["verified"] = false;
        j["reason"] = viaGr.yes ? viaDual.reason : viaGr.reason;
        emit(j);
        return kExitPropertyFails;
    }
    const bool rt = og::verify_round_trip(d, order, cfg.plucker_n_cap);
    j["round_trip"] = rt;
    j["verified"] = rt;
    emit(j);
    return rt ? kExitOk : kExitPropertyFails;
}

og::Json error_json(const std::string& kind, const std::string& what) {
    og::Json j;
    j["error"] = kind;
    j["detail"] = what;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular planar electrical networks and Kalmanson metrics"};
    app.require_subcommand(1);
    CommonArgs args;
    app.add_option("--config", args.config_path, "key=value config file")->expected(1);
    app.add_option("--format", args.format, "output format: json, csv, dot")->expected(1);

    struct Cmd {
        CLI::App* sub;
        int (*run)(const CommonArgs&);
    };
    std::vector<Cmd> cmds;
    auto add = [&](const char* name, const char* help, int (*run)(const CommonArgs&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();  // let --config / --format appear after the subcommand
        cmds.push_back({sub, run});
        return sub;
    };

    auto opt_metric = [&](CLI::App* s, bool = true) {
        s->add_option("--metric", args.metric_path, "distance matrix CSV");
    };
    auto opt_network = [&](CLI::App* s) {
        s->add_option("--network", args.network_path, "network JSON");
    };
    auto opt_order = [&](CLI::App* s) {
        s->add_option("--order", args.order_text, "circular order, e.g. 1,2,3,4");
    };

    auto* s_response = add("response", "response matrix of a network", cmd_response);
    opt_network(s_response);
    auto* s_resistance =
        add("resistance", "effective resistance matrix of a network", cmd_resistance);
    opt_network(s_resistance);
    auto* s_oracle = add("oracle-resistance", "spanning-tree resistance for one boundary pair",
                         cmd_oracle_resistance);
    opt_network(s_oracle);
    s_oracle->add_option("--pair", args.pair_text, "boundary positions i,j")->required();

    auto* s_kal = add("kalmanson", "check the Kalmanson inequalities", cmd_kalmanson);
    opt_metric(s_kal);
    opt_order(s_kal);
    s_kal->add_flag("--pseudo", args.pseudo, "allow zero off-diagonal distances");

    auto* s_find =
        add("find-order", "search for a circular order making the metric Kalmanson", cmd_find_order);
    opt_metric(s_find);
    s_find->add_flag("--pseudo", args.pseudo, "allow zero off-diagonal distances");

    auto* s_split =
        add("split-decompose", "split decomposition of a Kalmanson metric", cmd_split_decompose);
    opt_metric(s_split);
    opt_order(s_split);

    auto* s_stm =
        add("splits-to-metric", "metric of a weighted circular split system", cmd_splits_to_metric);
    s_stm->add_option("--splits", args.splits_path, "split system JSON");

    auto* s_gromov = add("gromov", "Gromov product (Farris transform) at a base node", cmd_gromov);
    opt_metric(s_gromov);
    s_gromov->add_option("--base", args.base, "base node id")->required();

    auto* s_mofd = add("m-of-d", "dual-response candidate M(D)", cmd_m_of_d);
    opt_metric(s_mofd);
    opt_order(s_mofd);

    auto* s_omega = add("omega", "Grassmannian representative matrix", cmd_omega);
    opt_metric(s_omega, false);
    opt_order(s_omega);
    s_omega->add_option("--response", args.response_path, "response matrix CSV");

    auto* s_plucker = add("plucker", "Plucker coordinates with a sign certificate", cmd_plucker);
    opt_metric(s_plucker, false);
    opt_order(s_plucker);
    s_plucker->add_option("--response", args.response_path, "response matrix CSV");
    s_plucker->add_option("--coord", args.coord_text, "single coordinate, e.g. 2,4,6");

    auto* s_isel =
        add("is-electrical", "electrical Kalmanson test via the Grassmannian", cmd_is_electrical);
    opt_metric(s_isel);
    opt_order(s_isel);

    auto* s_dresp = add("dual-response", "electrical Kalmanson test via circular minors of M(D)",
                        cmd_dual_response);
    opt_metric(s_dresp);
    opt_order(s_dresp);

    auto* s_dual =
        add("dualize", "planar dual network, or dual resistances from a response", cmd_dualize);
    s_dual->add_option("--network", args.network_path, "network JSON (with embedding)");
    s_dual->add_option("--response", args.response_path, "response matrix CSV");
    opt_order(s_dual);

    auto* s_strands = add("strands", "strand permutation of a metric", cmd_strands);
    opt_metric(s_strands);
    opt_order(s_strands);

    auto* s_rec =
        add("reconstruct", "minimal network topology from a resistance matrix", cmd_reconstruct);
    opt_metric(s_rec);
    opt_order(s_rec);
    s_rec->add_option("--dot-network", args.dot_network_path, "write the network as DOT");
    s_rec->add_option("--dot-medial", args.dot_medial_path, "write the medial diagram as DOT");

    auto* s_fit = add("fit-tree", "exact edge weights for a tree topology", cmd_fit_tree);
    s_fit->add_option("--tree", args.tree_path, "tree topology JSON");
    opt_metric(s_fit);

    auto* s_reduce = add("reduce", "loop/pendant/series/parallel reduction", cmd_reduce);
    opt_network(s_reduce);

    auto* s_verify = add("verify", "detector agreement plus strand round trip", cmd_verify);
    opt_metric(s_verify);
    opt_order(s_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        merge_config_defaults(args);
        for (const auto& c : cmds)
            if (c.sub->parsed()) return c.run(args);
        return kExitInputError;
    } catch (const og::TooLargeError& e) {
        emit(error_json("cap_exceeded", e.what()));
        return kExitCapExceeded;
    } catch (const og::NotKalmansonError& e) {
        emit(error_json("not_kalmanson", e.what()));
        return kExitPropertyFails;
    } catch (const og::NotInvolutionError& e) {
        emit(error_json("not_involution", e.what()));
        return kExitPropertyFails;
    } catch (const og::BoundaryDegenerateError& e) {
        emit(error_json("boundary_degenerate", e.what()));
        return kExitPropertyFails;
    } catch (const og::ColoringFailureError& e) {
        emit(error_json("coloring_failure", e.what()));
        return kExitPropertyFails;
    } catch (const og::NotTerminatedError& e) {
        emit(error_json("not_terminated", e.what()));
        return kExitPropertyFails;
    } catch (const og::InconsistentError& e) {
        emit(error_json("inconsistent", e.what()));
        return kExitPropertyFails;
    } catch (const og::NonPositiveWeightError& e) {
        emit(error_json("non_positive_weight", e.what()));
        return kExitPropertyFails;
    } catch (const og::Error& e) {
        emit(error_json("input_error", e.what()));
        return kExitInputError;
    } catch (const std::exception& e) {
        emit(error_json("input_error", e.what()));
        return kExitInputError;
    }
}
