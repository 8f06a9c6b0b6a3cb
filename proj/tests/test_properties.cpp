#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ohmgraph/electrical.hpp"
#include "ohmgraph/dual.hpp"
#include "ohmgraph/reconstruct.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace ohmgraph;

TEST_CASE("oracle equivalence on grown random networks") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + trial % 4;
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        const WeightedGraph g = gen::grow_network(rng, net.graph, 4);
        const Mat r = resistance_matrix(g);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK(resistance_oracle(g, i, j) == r(i - 1, j - 1));
    }
}

TEST_CASE("every transformation preserves the response on random sites") {
    std::mt19937 rng(103);
    int applied = 0;
    while (applied < 40) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto base = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, base.graph);
        WeightedGraph g = gen::grow_network(rng, base.graph, 3, 14);
        const Mat want = response_matrix(g);
        // collect applicable sites of each kind and apply one
        std::vector<std::pair<Move, Site>> sites;
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            if (g.edges[e].u == g.edges[e].v) sites.push_back({Move::remove_loop, {(int)e}});
        for (int v = 1; v <= g.vertex_count; ++v) {
            if (g.is_boundary(v)) continue;
            std::vector<int> inc;
            for (std::size_t e = 0; e < g.edges.size(); ++e)
                if (g.edges[e].u == v || g.edges[e].v == v) inc.push_back((int)e);
            bool loopless = true;
            for (int e : inc) loopless = loopless && g.edges[e].u != g.edges[e].v;
            if (inc.size() == 1 && loopless) sites.push_back({Move::remove_pendant, {v}});
            if (inc.size() == 2 && loopless) sites.push_back({Move::series, {v}});
            if (inc.size() == 3 && loopless) {
                std::set<int> nb;
                for (int e : inc)
                    nb.insert(g.edges[e].u == v ? g.edges[e].v : g.edges[e].u);
                if (nb.size() == 3) sites.push_back({Move::star_to_triangle, {v}});
            }
        }
        for (std::size_t a = 0; a < g.edges.size(); ++a)
            for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
                const auto &e1 = g.edges[a], &e2 = g.edges[b];
                if (e1.u == e1.v) continue;
                if ((e1.u == e2.u && e1.v == e2.v) || (e1.u == e2.v && e1.v == e2.u))
                    sites.push_back({Move::parallel, {(int)a, (int)b}});
            }
        {
            std::set<std::pair<int, int>> present;
            for (const auto& e : g.edges)
                if (e.u != e.v) present.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
            for (const auto& [a, b] : present)
                for (int c = b + 1; c <= g.vertex_count; ++c)
                    if (present.count({a, c}) && present.count({b, c}))
                        sites.push_back({Move::triangle_to_star, {a, b, c}});
        }
        if (sites.empty()) continue;
        const auto& [move, site] = sites[rng() % sites.size()];
        const WeightedGraph out = transform(g, move, site);
        CHECK(response_matrix(out) == want);
        ++applied;
    }
}

TEST_CASE("simplify preserves the response and reaches reduced form") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 4;
        auto base = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, base.graph);
        const WeightedGraph g = gen::grow_network(rng, base.graph, 6, 16);
        const WeightedGraph s = simplify(g);
        CHECK(response_matrix(s) == response_matrix(g));
        for (const auto& e : s.edges) CHECK(e.u != e.v);
        for (int v = 1; v <= s.vertex_count; ++v)
            if (!s.is_boundary(v)) CHECK(s.degree(v) >= 3);
        std::set<std::pair<int, int>> seen;
        for (const auto& e : s.edges)
            CHECK(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
    }
}

TEST_CASE("kalmanson property of random circular planar resistance matrices") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 4;
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        const Mat r = resistance_matrix(net.graph);
        CHECK(check_metric(r, true).ok());
        CHECK(kalmanson_check(r, identity_order(n)).ok);
    }
}

TEST_CASE("triangle inequality holds exactly for random resistance matrices") {
    std::mt19937 rng(113);
    for (int trial = 0; trial < 10; ++trial) {
        auto net = gen::random_minimal_network(rng, 3 + trial % 3);
        gen::randomize_weights(rng, net.graph);
        const WeightedGraph g = gen::grow_network(rng, net.graph, 3);
        CHECK(check_metric(resistance_matrix(g), true).ok());
    }
}

TEST_CASE("split decomposition round trips both ways") {
    std::mt19937 rng(127);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 4 + trial % 3;
        // system -> metric -> system
        const auto sys = gen::random_split_system(rng, n);
        const Mat d = metric_from_splits(sys);
        const auto rec = split_weights(d, identity_order(n));
        CHECK(metric_from_splits(rec) == d);
        std::set<std::pair<std::vector<int>, std::string>> a, b;
        for (const auto& [s, w] : sys.items) a.insert({s.a, to_string(w)});
        for (const auto& [s, w] : rec.items) b.insert({s.a, to_string(w)});
        CHECK(a == b);
        // metric -> system -> metric on electrical input
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        const Mat r = resistance_matrix(net.graph);
        const auto sys2 = split_weights(r, identity_order(n));
        for (const auto& [s, w] : sys2.items) CHECK(sign(w) > 0);
        CHECK(metric_from_splits(sys2) == r);
    }
}

TEST_CASE("m_of_d equals the dual response on random embedded networks") {
    std::mt19937 rng(131);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 3 + trial % 4;
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        const Mat r = resistance_matrix(net.graph);
        const WeightedGraph dual = dual_network(net.graph);
        CHECK(m_of_d(r, identity_order(n)) == response_matrix(dual));
        // and the Kenyon-Wilson resistance formula for the dual
        CHECK(resistance_from_dual_response(response_matrix(net.graph), identity_order(n)) ==
              resistance_matrix(dual));
    }
}

TEST_CASE("gromov transform inverts the truncated response on random networks") {
    std::mt19937 rng(137);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial % 3;
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        const Mat x = response_matrix(net.graph);
        const Mat r = resistance_matrix(net.graph);
        const auto inv = inverse(x.without_row_col(n - 1, n - 1));
        REQUIRE(inv.has_value());
        CHECK(gromov_transform(r, n) == *inv);
    }
}

TEST_CASE("both electrical detectors agree on random inputs") {
    std::mt19937 rng(139);
    int yeses = 0, nos = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + trial % 3;
        Mat d;
        if (trial % 2 == 0) {
            auto net = gen::random_minimal_network(rng, n);
            gen::randomize_weights(rng, net.graph);
            d = resistance_matrix(net.graph);
        } else {
            d = metric_from_splits(gen::random_split_system(rng, n));
        }
        const auto viaDual = is_electrical_via_dual(d, identity_order(n));
        const auto viaGr = is_electrical_via_grassmannian(d, identity_order(n));
        CHECK(viaDual.yes == viaGr.yes);
        if (viaDual.yes) {
            ++yeses;
            CHECK(verify_round_trip(d, identity_order(n)));
        } else {
            ++nos;
        }
    }
    CHECK(yeses > 0);
    CHECK(nos > 0);
}

TEST_CASE("response matrices of random networks pass the circular minor test") {
    std::mt19937 rng(149);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial % 4;
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        CHECK(circular_minor_test(response_matrix(net.graph)).ok());
    }
}

TEST_CASE("shift action preserves the nonnegativity certificate") {
    std::mt19937 rng(151);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 3 + trial % 3;
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        const Mat r = resistance_matrix(net.graph);
        const Mat md = m_of_d(r, identity_order(n));
        const OmegaMatrix pre = build_omega_response(md);
        const OmegaMatrix post = build_omega_resistance(r, identity_order(n));
        const auto c1 = certify_nonnegative(plucker(pre));
        const auto c2 = certify_nonnegative(plucker(post));
        CHECK(c1.nonnegative());
        CHECK(c2.nonnegative());
    }
}

TEST_CASE("both connectivity indicator coordinates are nonzero for connected networks") {
    std::mt19937 rng(157);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 3 + trial % 3;
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        const PluckerVector resp = plucker(build_omega_response(response_matrix(net.graph)));
        CHECK(connectivity_indicator(resp));  // Delta_{13...2n-3}
        const PluckerVector res =
            plucker(build_omega_resistance(resistance_matrix(net.graph), identity_order(n)));
        CHECK(connectivity_indicator(res));   // Delta_{24...2n-2}
    }
}
