#include <catch2/catch_amalgamated.hpp>

#include "ohmgraph/matrix.hpp"

using namespace ohmgraph;

TEST_CASE("det matches cofactor expansion on small cases") {
    CHECK(det(Mat{{rat(2)}}) == 2);
    CHECK(det(Mat{{1, 2}, {3, 4}}) == -2);
    CHECK(det(Mat{{0, 1}, {1, 0}}) == -1);
    // needs a row swap to pivot
    CHECK(det(Mat{{0, 1, 2}, {1, 0, 3}, {4, 5, 6}}) == 16);
    CHECK(det(Mat{{0, 1, 2}, {1, 0, 3}, {4, 5, 6}}.transposed()) == 16);
}

TEST_CASE("det with rational entries clears denominators correctly") {
    const Mat m{{rat(1, 2), rat(1, 3)}, {rat(1, 5), rat(1, 7)}};
    CHECK(det(m) == rat(1, 2) * rat(1, 7) - rat(1, 3) * rat(1, 5));
}

TEST_CASE("singular matrices have zero determinant and no inverse") {
    const Mat m{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
    CHECK(det(m) == 0);
    CHECK(!inverse(m).has_value());
    CHECK(rank(m) == 2);
}

TEST_CASE("inverse round-trips") {
    const Mat m{{rat(5, 8), rat(-1, 8), rat(-1, 8)},
                {rat(-1, 8), rat(5, 8), rat(-3, 8)},
                {rat(-1, 8), rat(-3, 8), rat(5, 8)}};
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv) == Mat::identity(3));
    CHECK(*inv == Mat{{2, 1, 1}, {1, 3, 2}, {1, 2, 3}});
}

TEST_CASE("solve reports inconsistent and underdetermined systems") {
    const Mat a{{1, 1}, {2, 2}};
    CHECK(!solve(a, {rat(1), rat(3)}).has_value());
    bool unique = true;
    const auto x = solve(a, {rat(1), rat(2)}, &unique);
    REQUIRE(x.has_value());
    CHECK(!unique);
    const Mat b{{1, 0}, {1, 1}, {0, 1}};
    bool unique2 = false;
    const auto y = solve(b, {rat(2), rat(5), rat(3)}, &unique2);
    REQUIRE(y.has_value());
    CHECK(unique2);
    CHECK((*y)[0] == 2);
    CHECK((*y)[1] == 3);
}

TEST_CASE("rank of rectangular matrices") {
    const Mat m{{1, 0, 2, 0}, {0, 1, 3, 0}, {1, 1, 5, 0}};
    CHECK(rank(m) == 2);
    CHECK(rank(Mat(3, 3)) == 0);
    CHECK(rank(Mat::identity(4)) == 4);
}
