#pragma once

#include <vector>

#include "ohmgraph/matrix.hpp"
#include "ohmgraph/omega.hpp"

namespace ohmgraph {

/// Strand data: g in one-window notation (values 1..2n) and tau = g + 1 mod 2n.
struct StrandPermutation {
    std::vector<int> g;    // g[i-1] = g(i), 1-based values
    std::vector<int> tau;  // tau[i-1] = tau(i)

    /// Pairs (i, tau(i)) with i < tau(i).
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= static_cast<int>(tau.size()); ++i)
            if (i < tau[i - 1]) out.push_back({i, tau[i - 1]});
        return out;
    }
};

/// g(i) = minimal j (walking i+1, i+2, ... mod 2n) with column A_i inside
/// span(A_{i+1}, ..., A_j). Span membership is an exact rank test.
inline std::vector<int> column_permutation_g(const OmegaMatrix& o) {
    const int n = o.n();
    const int n2 = 2 * n;
    const Mat& m = o.m;
    std::vector<int> g(n2, 0);
    for (int i = 1; i <= n2; ++i) {
        // grow an echelon basis column by column; test membership incrementally
        std::vector<std::vector<Rational>> basis;  // reduced rows
        auto reduce = [&](std::vector<Rational> v) {
            for (const auto& b : basis) {
                // find pivot of b
                std::size_t pc = 0;
                while (pc < b.size() && b[pc] == 0) ++pc;
                if (pc == b.size()) continue;
                if (v[pc] != 0) {
                    const Rational f = v[pc] / b[pc];
                    for (std::size_t t = pc; t < v.size(); ++t) v[t] -= f * b[t];
                }
            }
            return v;
        };
        std::vector<Rational> target(n);
        for (int r = 0; r < n; ++r) target[r] = m(r, i - 1);
        bool found = false;
        for (int step = 1; step <= n2 && !found; ++step) {
            const int j = (i + step - 1) % n2 + 1;
            std::vector<Rational> col(n);
            for (int r = 0; r < n; ++r) col[r] = m(r, j - 1);
            auto red = reduce(std::move(col));
            bool nonzero = false;
            for (const auto& x : red) nonzero = nonzero || x != 0;
            if (nonzero) basis.push_back(std::move(red));
            auto t = reduce(target);
            bool in_span = true;
            for (const auto& x : t) in_span = in_span && x == 0;
            if (in_span) {
                g[i - 1] = j;
                found = true;
            }
        }
        if (!found)
            throw DegenerateError("column " + std::to_string(i) +
                                  " is never absorbed within one window");
    }
    return g;
}

/// tau = g + 1 reduced to {1..2n}; refuses anything that is not a
/// fixed-point-free involution (cactus or otherwise degenerate input).
inline StrandPermutation strand_permutation(const std::vector<int>& g) {
    const int n2 = static_cast<int>(g.size());
    StrandPermutation sp;
    sp.g = g;
    sp.tau.resize(n2);
    for (int i = 1; i <= n2; ++i) sp.tau[i - 1] = g[i - 1] % n2 + 1;
    for (int i = 1; i <= n2; ++i) {
        const int t = sp.tau[i - 1];
        if (t < 1 || t > n2 || t == i)
            throw NotInvolutionError("tau has a fixed point at " + std::to_string(i) +
                                     " (check the connectivity coordinate Delta_{24...2n-2})");
        if (sp.tau[t - 1] != i)
            throw NotInvolutionError("tau is not an involution at " + std::to_string(i) +
                                     " (check the connectivity coordinate Delta_{24...2n-2})");
    }
    return sp;
}

}  // namespace ohmgraph
