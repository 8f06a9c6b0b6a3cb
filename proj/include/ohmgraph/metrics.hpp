#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ohmgraph/matrix.hpp"

namespace ohmgraph {

/// Node ids 1..n read clockwise.
using CircularOrder = std::vector<int>;

inline CircularOrder identity_order(int n) {
    CircularOrder o(n);
    for (int i = 0; i < n; ++i) o[i] = i + 1;
    return o;
}

inline bool is_valid_order(const CircularOrder& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(n + 1, 0);
    for (int v : order) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

/// D reindexed so position a holds node order[a].
inline Mat permuted(const Mat& d, const CircularOrder& order) {
    const std::size_t n = order.size();
    Mat out(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out(a, b) = d(order[a] - 1, order[b] - 1);
    return out;
}

struct MetricReport {
    struct TriangleViolation {
        int i, j, k;          // node ids: d(i,k) > d(i,j) + d(j,k)
        Rational lhs, rhs;
    };
    std::vector<std::pair<int, int>> asymmetric;
    std::vector<int> nonzero_diagonal;
    std::vector<std::pair<int, int>> negative;
    std::vector<std::pair<int, int>> zero_off_diagonal;  // only when pseudometrics are rejected
    std::vector<TriangleViolation> triangles;

    bool ok() const {
        return asymmetric.empty() && nonzero_diagonal.empty() && negative.empty() &&
               zero_off_diagonal.empty() && triangles.empty();
    }
};

/// Reports every symmetry/diagonal/negativity/triangle violation with witnesses.
inline MetricReport check_metric(const Mat& d, bool allow_pseudometric = false) {
    MetricReport rep;
    const int n = static_cast<int>(d.rows());
    for (int i = 0; i < n; ++i) {
        if (d(i, i) != 0) rep.nonzero_diagonal.push_back(i + 1);
        for (int j = 0; j < n; ++j) {
            if (j > i && d(i, j) != d(j, i)) rep.asymmetric.push_back({i + 1, j + 1});
            if (i != j && sign(d(i, j)) < 0) rep.negative.push_back({i + 1, j + 1});
            if (!allow_pseudometric && j > i && d(i, j) == 0 && d(j, i) == 0)
                rep.zero_off_diagonal.push_back({i + 1, j + 1});
        }
    }
    if (!rep.asymmetric.empty()) return rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (d(i, k) > d(i, j) + d(j, k))
                    rep.triangles.push_back({i + 1, j + 1, k + 1, d(i, k), d(i, j) + d(j, k)});
            }
    return rep;
}

struct KalmansonResult {
    bool ok = true;
    std::array<int, 4> quadruple{};  // node ids in the tested circular order
    int inequality = 0;              // 1 or 2
    Rational lhs, rhs;
};

/// Both four-point conditions for every quadruple taken clockwise in the given
/// order: d(i1,i3)+d(i2,i4) must dominate d(i2,i3)+d(i1,i4) and d(i1,i2)+d(i3,i4).
inline KalmansonResult kalmanson_check(const Mat& d, const CircularOrder& order) {
    const int n = static_cast<int>(d.rows());
    if (!is_valid_order(order, n)) throw ParseError("order is not a permutation of 1..n");
    const Mat p = permuted(d, order);
    KalmansonResult res;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int e = c + 1; e < n; ++e) {
                    const Rational lhs = p(a, c) + p(b, e);
                    const Rational rhs1 = p(b, c) + p(a, e);
                    const Rational rhs2 = p(a, b) + p(c, e);
                    if (lhs < rhs1 || lhs < rhs2) {
                        res.ok = false;
                        res.quadruple = {order[a], order[b], order[c], order[e]};
                        res.inequality = lhs < rhs1 ? 1 : 2;
                        res.lhs = lhs;
                        res.rhs = lhs < rhs1 ? rhs1 : rhs2;
                        return res;
                    }
                }
    return res;
}

inline constexpr int kOrderSearchCap = 10;

/// Brute-force search for a circular order under which D is Kalmanson.
/// Deterministic: returns the lexicographically least passing sequence that
/// starts at node 1 (rotations of an order are equivalent).
inline std::optional<CircularOrder> find_circular_order(const Mat& d,
                                                        int cap = kOrderSearchCap) {
    const int n = static_cast<int>(d.rows());
    if (n > cap) throw TooLargeError("order search cap exceeded");
    if (n <= 3) {
        const CircularOrder id = identity_order(n);
        if (kalmanson_check(d, id).ok) return id;
        return std::nullopt;
    }
    std::vector<int> tail;
    for (int v = 2; v <= n; ++v) tail.push_back(v);
    do {
        CircularOrder order;
        order.push_back(1);
        order.insert(order.end(), tail.begin(), tail.end());
        if (kalmanson_check(d, order).ok) return order;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return std::nullopt;
}

/// Gromov product (Farris transform) at the given base node (1-based id):
/// out(i,j) = (d(i,base)+d(j,base)-d(i,j))/2 with diagonal d(i,base).
/// For a resistance matrix with base n this is the inverse of the truncated
/// response matrix.
inline Mat gromov_transform(const Mat& d, int base) {
    const int n = static_cast<int>(d.rows());
    if (base < 1 || base > n) throw ParseError("base node out of range");
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != base) rest.push_back(v);
    Mat out(rest.size(), rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = 0; j < rest.size(); ++j) {
            const int a = rest[i] - 1, b = rest[j] - 1, c = base - 1;
            out(i, j) = i == j ? d(a, c) : (d(a, c) + d(b, c) - d(a, b)) / 2;
        }
    return out;
}

}  // namespace ohmgraph
