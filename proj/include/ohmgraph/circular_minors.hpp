#pragma once

#include <string>
#include <vector>

#include "ohmgraph/matrix.hpp"
#include "ohmgraph/response.hpp"

namespace ohmgraph {

/// Ordered circular pair (P;Q): p_1..p_k,q_k..q_1 read clockwise around the
/// circle of nodes 1..n.
struct CircularPair {
    std::vector<int> p, q;  // node ids, each of length k
};

/// Complete duplicate-free enumeration: every rotation of every 2k-subset of
/// the circle, split as the first k (P) against the reversed last k (Q).
inline std::vector<CircularPair> enumerate_circular_pairs(int n, int k) {
    std::vector<CircularPair> out;
    if (k < 1 || 2 * k > n) return out;
    std::vector<int> idx(2 * k);
    for (int i = 0; i < 2 * k; ++i) idx[i] = i;
    while (true) {
        for (int r = 0; r < 2 * k; ++r) {
            CircularPair cp;
            // the clockwise walk reads p_1..p_k, q_k..q_1
            for (int t = 0; t < k; ++t) cp.p.push_back(idx[(r + t) % (2 * k)] + 1);
            for (int t = 2 * k - 1; t >= k; --t) cp.q.push_back(idx[(r + t) % (2 * k)] + 1);
            out.push_back(std::move(cp));
        }
        // next 2k-subset of {0..n-1}
        int i = 2 * k - 1;
        while (i >= 0 && idx[i] == n - 2 * k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < 2 * k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

struct CircularMinorResult {
    enum class Status { ok, precondition_failed, negative_minor, rank_defect };
    Status status = Status::ok;
    std::string detail;
    CircularPair witness;  // for negative_minor
    int k = 0;
    Rational value;

    bool ok() const { return status == Status::ok; }
};

/// Theorem test for valid response matrices: every circular minor is
/// non-negative after multiplying by (-1)^k, and the rank is exactly n-1
/// (kernel spanned by the all-ones vector).
inline CircularMinorResult circular_minor_test(const Mat& m) {
    CircularMinorResult res;
    std::string why;
    if (!is_valid_response(m, &why)) {
        res.status = CircularMinorResult::Status::precondition_failed;
        res.detail = why;
        return res;
    }
    const int n = static_cast<int>(m.rows());
    for (int k = 1; 2 * k <= n; ++k) {
        for (auto& cp : enumerate_circular_pairs(n, k)) {
            std::vector<std::size_t> rows, cols;
            for (int v : cp.p) rows.push_back(v - 1);
            for (int v : cp.q) cols.push_back(v - 1);
            Rational d = det(m.submatrix(rows, cols));
            if (k % 2 == 1) d = -d;
            if (sign(d) < 0) {
                res.status = CircularMinorResult::Status::negative_minor;
                res.witness = cp;
                res.k = k;
                res.value = d;
                return res;
            }
        }
    }
    if (rank(m) != static_cast<std::size_t>(n - 1)) {
        res.status = CircularMinorResult::Status::rank_defect;
        res.detail = "rank is not n-1";
        return res;
    }
    return res;
}

}  // namespace ohmgraph
