#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ohmgraph/electrical.hpp"
#include "ohmgraph/omega.hpp"
#include "ohmgraph/plucker.hpp"
#include "ohmgraph/resistance.hpp"
#include "ohmgraph/response.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace ohmgraph;

TEST_CASE("omega of the tree response reproduces its known 4x8 form") {
    const OmegaMatrix o = build_omega_response(fixtures::tree_response());
    const Rational a(5, 8), b(1, 8), c(3, 8);
    const Mat want{{a, 1, b, 0, -b, 0, c, 1},
                   {b, 1, a, 1, c, 0, -b, 0},
                   {-b, 0, c, 1, a, 1, b, 0},
                   {c, 0, -b, 0, b, 1, a, 1}};
    CHECK(o.m == want);
    CHECK(o.deleted_row() == 1);
    CHECK(rank(o.m) == 3);
}

TEST_CASE("omega response of n=2 single edge") {
    const Rational c = rat(7, 5);
    const OmegaMatrix o = build_omega_response(Mat{{c, -c}, {-c, c}});
    CHECK(o.m == Mat{{c, 1, c, 1}, {c, 1, c, 1}});
    CHECK(rank(o.m) == 1);
}

TEST_CASE("omega response rejects invalid input") {
    CHECK_THROWS_AS(build_omega_response(Mat{{1, 0}, {0, 1}}), InvalidResponseError);
    CHECK_THROWS_AS(build_omega_response(Mat{{-1, 1}, {1, -1}}), InvalidResponseError);
}

TEST_CASE("omega resistance of the tree metric reproduces the known row values") {
    const OmegaMatrix o = build_omega_resistance(fixtures::tree_metric(), identity_order(4));
    CHECK(o.deleted_row() == 4);
    const Mat top{{1, 3, 1, 1, 0, -1, 0, 1},
                  {0, 1, 1, 2, 1, 1, 0, 0},
                  {0, -1, 0, 1, 1, 3, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 8; ++j) CHECK(o.m(i, j) == top(i, j));
    // operational definition: equals Omega(M(D)) right-multiplied by the shift
    const Mat md = m_of_d(fixtures::tree_metric(), identity_order(4));
    const Mat composed = build_omega_response(md).m * shift_operator(4);
    CHECK(o.m == composed);
}

TEST_CASE("displayed resistance-form pattern holds on rows 1..n-1") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        auto net = gen::random_minimal_network(rng, 4);
        gen::randomize_weights(rng, net.graph);
        const Mat d = resistance_matrix(net.graph);
        const Mat md = m_of_d(d, identity_order(4));
        const OmegaMatrix o = build_omega_resistance(d, identity_order(4));
        const int n = 4;
        for (int i = 1; i <= n - 1; ++i) {
            for (int j = 1; j <= n; ++j) {
                const Rational want = (i + j) % 2 == 0 ? md(i - 1, j - 1) : -md(i - 1, j - 1);
                CHECK(o.m(i - 1, 2 * j - 1) == want);
            }
            for (int j = 0; j <= n - 1; ++j) {
                const bool one = (j == i - 1) || (j == i);
                if (2 * j + 1 <= 2 * n)
                    CHECK(o.m(i - 1, (2 * j + 1) - 1) == (one ? 1 : 0));
            }
        }
    }
}

TEST_CASE("scaling the metric scales even columns and fixes odd ones") {
    const Mat d = fixtures::tree_metric();
    const Rational lam(5, 3);
    const OmegaMatrix o1 = build_omega_resistance(d, identity_order(4));
    const OmegaMatrix o2 = build_omega_resistance(d.scaled(lam), identity_order(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            CHECK(o2.m(i, 2 * j - 1) == lam * o1.m(i, 2 * j - 1));
            CHECK(o2.m(i, 2 * j - 2) == o1.m(i, 2 * j - 2));
        }
}

TEST_CASE("plucker vector of the four-leaf tree example is nonnegative with Delta246 positive") {
    const OmegaMatrix o = build_omega_resistance(fixtures::tree_metric(), identity_order(4));
    const PluckerVector p = plucker(o);
    CHECK(p.coords.size() == 56);
    int nonzero = 0;
    for (const auto& [key, v] : p.coords) {
        CHECK(sign(v) >= 0);
        if (v != 0) ++nonzero;
    }
    CHECK(nonzero > 0);
    const Rational* d246 = p.find({2, 4, 6});
    REQUIRE(d246 != nullptr);
    CHECK(*d246 > 0);
    CHECK(*d246 == 8);
    const auto cert = certify_nonnegative(p);
    CHECK(cert.nonnegative());
    CHECK(cert.to_symbol() == "+");
    CHECK(connectivity_indicator(p));
}

TEST_CASE("certify_nonnegative flags mixed signs with a witness pair") {
    PluckerVector p;
    p.n = 4;
    p.coords.push_back({{1, 2, 3}, rat(1)});
    p.coords.push_back({{1, 2, 4}, rat(-1)});
    const auto cert = certify_nonnegative(p);
    CHECK(!cert.nonnegative());
    CHECK(cert.positive_witness == std::vector<int>{1, 2, 3});
    CHECK(cert.negative_witness == std::vector<int>{1, 2, 4});
}

TEST_CASE("all-zero plucker vector is rejected") {
    PluckerVector p;
    p.n = 4;
    p.coords.push_back({{1, 2, 3}, rat(0)});
    CHECK_THROWS_AS(certify_nonnegative(p), AllZeroError);
}

TEST_CASE("rank-deficient omega yields the all-zero vector") {
    OmegaMatrix o;
    o.m = Mat(3, 6);  // zero rows: every minor vanishes
    o.form = OmegaForm::resistance;
    const PluckerVector p = plucker(o);
    for (const auto& [k, v] : p.coords) CHECK(v == 0);
    CHECK(!connectivity_indicator(p));
}

TEST_CASE("plucker cap throws TooLarge") {
    Mat big(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) big(i, j) = i == j ? 8 : -1;
    const OmegaMatrix o = build_omega_response(big);
    CHECK_THROWS_AS(plucker(o), TooLargeError);
    CHECK_NOTHROW(plucker_coordinate(o, {1, 3, 5, 7, 9, 11, 13, 15}));
}

TEST_CASE("n=4 minor identities (corrected coordinates)") {
    // The four-point slacks appear as maximal minors of Omega_R':
    //   Delta_123 = Delta_567 = (R13 + R24 - R23 - R14) / 2
    //   Delta_345 = Delta_178 = (R13 + R24 - R12 - R34) / 2
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto net = gen::random_minimal_network(rng, 4);
        gen::randomize_weights(rng, net.graph);
        const Mat r = resistance_matrix(net.graph);
        const OmegaMatrix o = build_omega_resistance(r, identity_order(4));
        const Rational form1 = (r(0, 2) + r(1, 3) - r(1, 2) - r(0, 3)) / 2;
        const Rational form2 = (r(0, 2) + r(1, 3) - r(0, 1) - r(2, 3)) / 2;
        CHECK(plucker_coordinate(o, {1, 2, 3}) == form1);
        CHECK(plucker_coordinate(o, {5, 6, 7}) == form1);
        CHECK(plucker_coordinate(o, {3, 4, 5}) == form2);
        CHECK(plucker_coordinate(o, {1, 7, 8}) == form2);
    }
}

TEST_CASE("response-form and resistance-form omegas define the same projective point") {
    std::mt19937 rng(23);
    for (int n : {3, 4, 5}) {
        auto net = gen::random_minimal_network(rng, n);
        gen::randomize_weights(rng, net.graph);
        const Mat x = response_matrix(net.graph);
        const Mat r = resistance_matrix(net.graph);
        const PluckerVector p1 = plucker(build_omega_response(x));
        const PluckerVector p2 = plucker(build_omega_resistance(r, identity_order(n)));
        REQUIRE(p1.coords.size() == p2.coords.size());
        // all 2x2 cross products vanish
        const auto& a0 = p1.coords;
        const auto& b0 = p2.coords;
        for (std::size_t i = 0; i < a0.size(); ++i)
            for (std::size_t j = i + 1; j < a0.size(); ++j)
                CHECK(a0[i].second * b0[j].second == a0[j].second * b0[i].second);
        // stacked rank stays n-1
        const OmegaMatrix o1 = build_omega_response(m_of_d(r, identity_order(n)));
        const Mat shifted_o1 = o1.m * shift_operator(n);
        const OmegaMatrix o2 = build_omega_resistance(r, identity_order(n));
        Mat stacked(2 * n, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 2 * n; ++j) {
                stacked(i, j) = shifted_o1(i, j);
                stacked(n + i, j) = o2.m(i, j);
            }
        CHECK(rank(stacked) == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("three-term plucker relations hold on sampled quadruples") {
    std::mt19937 rng(31);
    auto net = gen::random_minimal_network(rng, 4);
    gen::randomize_weights(rng, net.graph);
    const Mat r = resistance_matrix(net.graph);
    const PluckerVector p = plucker(build_omega_resistance(r, identity_order(4)));
    auto coord = [&](std::vector<int> key) {
        std::sort(key.begin(), key.end());
        int swaps = 0;  // keys here are already sorted and distinct by construction
        const Rational* v = p.find(key);
        REQUIRE(v != nullptr);
        (void)swaps;
        return *v;
    };
    std::uniform_int_distribution<int> pick(1, 8);
    int tested = 0;
    while (tested < 100) {
        // S is a single column, a<b<c<d the others: Plucker three-term relation
        std::vector<int> cols{pick(rng), pick(rng), pick(rng), pick(rng), pick(rng)};
        std::sort(cols.begin(), cols.end());
        if (std::unique(cols.begin(), cols.end()) != cols.end()) continue;
        const int s = cols[0], a = cols[1], b = cols[2], c = cols[3], d = cols[4];
        const Rational lhs = coord({s, a, c}) * coord({s, b, d});
        const Rational rhs = coord({s, a, b}) * coord({s, c, d}) + coord({s, a, d}) * coord({s, b, c});
        CHECK(lhs == rhs);
        ++tested;
    }
}

TEST_CASE("is_electrical agrees on the four-leaf tree example and pure splits") {
    const auto d1 = is_electrical_via_dual(fixtures::tree_metric(), identity_order(4));
    const auto g1 = is_electrical_via_grassmannian(fixtures::tree_metric(), identity_order(4));
    CHECK(d1.yes);
    CHECK(g1.yes);
    REQUIRE(g1.indicator.has_value());
    CHECK(*g1.indicator == 8);

    // a pure split metric degenerates: rank of M(D) < n-1
    const Mat d = split_metric(Split::of({1, 2}, {3, 4}), 4).scaled(rat(3));
    const auto d2 = is_electrical_via_dual(d, identity_order(4));
    const auto g2 = is_electrical_via_grassmannian(d, identity_order(4));
    CHECK(!d2.yes);
    CHECK(!g2.yes);
    CHECK(d2.reason.find("cactus") != std::string::npos);
}

TEST_CASE("is_electrical refuses non-kalmanson input") {
    const Mat bad = permuted(fixtures::tree_metric(), CircularOrder{1, 2, 4, 3});
    CHECK_THROWS_AS(is_electrical_via_dual(bad, identity_order(4)), NotKalmansonError);
    CHECK_THROWS_AS(is_electrical_via_grassmannian(bad, identity_order(4)), NotKalmansonError);
}

TEST_CASE("shift operator matches its definition") {
    const Mat s = shift_operator(3);
    CHECK(s(0, 1) == 1);
    CHECK(s(4, 5) == 1);
    CHECK(s(5, 0) == -1);
    CHECK(shift_operator(4)(7, 0) == 1);
}

TEST_CASE("zero response matrix builds but is flagged by the indicators") {
    const Mat zero(4, 4);
    CHECK(is_valid_response(zero));
    const OmegaMatrix o = build_omega_response(zero);
    CHECK(rank(o.m) == 3);  // the 0/1 pattern columns alone carry rank n-1
    const PluckerVector p = plucker(o);
    CHECK(!connectivity_indicator(p));  // Delta_{13...2n-3} vanishes: no connected network

    // zero pseudometric: both detectors agree on "no" at the fully degenerate point
    const auto viaDual = is_electrical_via_dual(zero, identity_order(4));
    const auto viaGr = is_electrical_via_grassmannian(zero, identity_order(4));
    CHECK(!viaDual.yes);
    CHECK(!viaGr.yes);
}

TEST_CASE("a kalmanson non-electrical instance with full rank carries a mixed-sign witness") {
    // search weighted circular split systems for a full-rank M(D) whose signed
    // circular minors go negative; the grassmannian route must then see mixed signs
    std::mt19937 rng(163);
    bool found = false;
    for (int trial = 0; trial < 400 && !found; ++trial) {
        const int n = 4 + trial % 3;
        const Mat d = metric_from_splits(gen::random_split_system(rng, n));
        const auto viaDual = is_electrical_via_dual(d, identity_order(n));
        if (viaDual.yes) continue;
        REQUIRE(viaDual.minor_witness.has_value());
        if (viaDual.minor_witness->status != CircularMinorResult::Status::negative_minor) continue;
        found = true;
        const auto viaGr = is_electrical_via_grassmannian(d, identity_order(n));
        CHECK(!viaGr.yes);
        CHECK(!viaGr.negative_witness.empty());
        CHECK(!viaGr.positive_witness.empty());
    }
    CHECK(found);
}
