#pragma once

#include <string>
#include <vector>

#include "ohmgraph/graph.hpp"
#include "ohmgraph/matrix.hpp"

namespace ohmgraph {

/// Checks the Dirichlet-to-Neumann invariants: symmetry, non-positive
/// off-diagonal entries, zero row sums.
inline bool is_valid_response(const Mat& m, std::string* why = nullptr) {
    if (m.rows() != m.cols()) {
        if (why) *why = "not square";
        return false;
    }
    if (!m.is_symmetric()) {
        if (why) *why = "not symmetric";
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && sign(m(i, j)) > 0) {
                if (why)
                    *why = "positive off-diagonal at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")";
                return false;
            }
        if (m.row_sum(i) != 0) {
            if (why) *why = "row " + std::to_string(i + 1) + " does not sum to zero";
            return false;
        }
    }
    return true;
}

/// Response matrix (boundary-to-boundary map) as the Schur complement of the
/// interior block of the Laplacian. Rows/columns follow boundary positions.
inline Mat response_matrix(const WeightedGraph& g) {
    if (!every_component_touches_boundary(g))
        throw InteriorSingularError("an interior component is detached from the boundary");
    const int nb = g.n();
    // order vertices boundary-first
    std::vector<int> order(g.boundary.begin(), g.boundary.end());
    for (int v = 1; v <= g.vertex_count; ++v)
        if (!g.is_boundary(v)) order.push_back(v);
    const Mat l = laplacian(g);
    const std::size_t total = order.size();
    Mat m(total, total);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) m(i, j) = l(order[i] - 1, order[j] - 1);
    // eliminate interior variables from the bottom up; the interior block is
    // positive definite here, so pivots never vanish
    for (std::size_t k = total; k-- > static_cast<std::size_t>(nb);) {
        const Rational piv = m(k, k);
        if (piv == 0) throw InteriorSingularError("singular interior pivot");
        for (std::size_t r = 0; r < k; ++r) {
            if (m(r, k) == 0) continue;
            const Rational f = m(r, k) / piv;
            for (std::size_t c = 0; c <= k; ++c) m(r, c) -= f * m(k, c);
        }
    }
    Mat x(nb, nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) x(i, j) = m(i, j);
    return x;
}

}  // namespace ohmgraph
