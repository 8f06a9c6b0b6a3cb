#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ohmgraph/matrix.hpp"
#include "ohmgraph/metrics.hpp"

namespace ohmgraph {

/// Bipartition of {1..n}, normalized so the block holding node 1 is A.
struct Split {
    std::vector<int> a, b;  // sorted node ids

    static Split of(std::vector<int> x, std::vector<int> y) {
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (std::find(y.begin(), y.end(), 1) != y.end()) std::swap(x, y);
        return Split{std::move(x), std::move(y)};
    }

    bool separates(int i, int j) const {
        const bool ia = std::binary_search(a.begin(), a.end(), i);
        const bool ja = std::binary_search(a.begin(), a.end(), j);
        return ia != ja;
    }

    bool operator==(const Split& o) const { return a == o.a && b == o.b; }
    bool operator<(const Split& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

inline void validate(const Split& s, int n) {
    if (s.a.empty() || s.b.empty()) throw ParseError("split blocks must be non-empty");
    std::vector<char> seen(n + 1, 0);
    for (int v : s.a) {
        if (v < 1 || v > n || seen[v]) throw ParseError("split block out of range or overlapping");
        seen[v] = 1;
    }
    for (int v : s.b) {
        if (v < 1 || v > n || seen[v]) throw ParseError("split block out of range or overlapping");
        seen[v] = 1;
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) throw ParseError("split does not cover every node");
}

struct WeightedSplitSystem {
    int n = 0;
    CircularOrder order;  // the order the system is circular with respect to
    std::vector<std::pair<Split, Rational>> items;
};

/// 0/1 pseudometric of a split: distance 1 across the split, 0 within a block.
inline Mat split_metric(const Split& s, int n) {
    validate(s, n);
    Mat d(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && s.separates(i, j)) d(i - 1, j - 1) = 1;
    return d;
}

/// Weighted sum of split pseudometrics.
inline Mat metric_from_splits(const WeightedSplitSystem& sys) {
    Mat d(sys.n, sys.n);
    for (const auto& [s, w] : sys.items) {
        for (int i = 1; i <= sys.n; ++i)
            for (int j = 1; j <= sys.n; ++j)
                if (i != j && s.separates(i, j)) d(i - 1, j - 1) += w;
    }
    return d;
}

namespace detail {

/// omega_{ab} over positions in the permuted matrix, indices wrapping mod n.
inline Rational split_weight_at(const Mat& p, int a, int b) {
    const int n = static_cast<int>(p.rows());
    const int a1 = (a + 1) % n, b1 = (b + 1) % n;
    return (p(a, b) + p(a1, b1) - p(a, b1) - p(a1, b)) / 2;
}

/// Split S_ab in the given order: chord between the dual points after positions
/// a and b cuts the node circle into {order[a+1..b]} versus the rest.
inline Split chord_split(const CircularOrder& order, int a, int b) {
    const int n = static_cast<int>(order.size());
    std::vector<int> block, rest;
    for (int t = (a + 1) % n; ; t = (t + 1) % n) {
        block.push_back(order[t]);
        if (t == b) break;
    }
    std::set<int> in(block.begin(), block.end());
    for (int v : order)
        if (!in.count(v)) rest.push_back(v);
    return Split::of(std::move(block), std::move(rest));
}

}  // namespace detail

/// Unique split decomposition of a Kalmanson metric in the given circular
/// order. Zero-weight splits are dropped; any negative weight means the metric
/// is not Kalmanson in this order and is reported as such.
inline WeightedSplitSystem split_weights(const Mat& d, const CircularOrder& order) {
    const int n = static_cast<int>(d.rows());
    if (!is_valid_order(order, n)) throw ParseError("order is not a permutation of 1..n");
    const Mat p = permuted(d, order);
    WeightedSplitSystem sys;
    sys.n = n;
    sys.order = order;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const Rational w = detail::split_weight_at(p, a, b);
            if (w == 0) continue;
            if (sign(w) < 0)
                throw NotKalmansonError("negative split weight at chord (" +
                                        std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
            sys.items.push_back({detail::chord_split(order, a, b), w});
        }
    if (metric_from_splits(sys) != d)
        throw NotKalmansonError("split decomposition does not reconstruct the metric");
    return sys;
}

/// M(D): negated split-weight matrix. Symmetric with zero row sums; diagonal
/// entry i equals d(i, i+1) in the given order. For an electrical D this is the
/// response matrix of the dual network.
inline Mat m_of_d(const Mat& d, const CircularOrder& order) {
    const int n = static_cast<int>(d.rows());
    if (!is_valid_order(order, n)) throw ParseError("order is not a permutation of 1..n");
    const Mat p = permuted(d, order);
    Mat m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m(a, b) = -detail::split_weight_at(p, a, b);
    return m;
}

/// Resistance matrix of the dual network from the response matrix of the
/// primal: R*_ab = -sum of x_{a'b'} over the pairs separated by the chord
/// split S_ab (Kenyon-Wilson).
inline Mat resistance_from_dual_response(const Mat& x, const CircularOrder& order) {
    const int n = static_cast<int>(x.rows());
    if (!is_valid_order(order, n)) throw ParseError("order is not a permutation of 1..n");
    const Mat p = permuted(x, order);
    Mat r(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            // positions separated by the chord between dual points a and b
            std::vector<char> in_block(n, 0);
            for (int t = (a + 1) % n; ; t = (t + 1) % n) {
                in_block[t] = 1;
                if (t == b) break;
            }
            Rational s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (in_block[i] != in_block[j]) s += p(i, j);
            r(a, b) = r(b, a) = -s;
        }
    return r;
}

}  // namespace ohmgraph
