#pragma once

#include <string>

#include "ohmgraph/matrix.hpp"
#include "ohmgraph/metrics.hpp"
#include "ohmgraph/response.hpp"
#include "ohmgraph/splits.hpp"

namespace ohmgraph {

enum class OmegaForm {
    response,    // built from a response matrix; Plucker minors delete row 1
    resistance,  // built from a distance matrix;  Plucker minors delete row n
};

/// n x 2n Grassmannian representative of a network. Rank is n-1 by the row-sum
/// relation, so the row it is conventional to delete is redundant.
struct OmegaMatrix {
    Mat m;  // n x 2n
    OmegaForm form = OmegaForm::response;

    int n() const { return static_cast<int>(m.rows()); }

    /// 1-based row deleted for Plucker computation.
    int deleted_row() const { return form == OmegaForm::response ? 1 : n(); }

    /// (n-1) x 2n matrix whose maximal minors are the Plucker coordinates.
    Mat deleted() const {
        const int r = deleted_row() - 1;
        std::vector<std::size_t> rows;
        for (int i = 0; i < n(); ++i)
            if (i != r) rows.push_back(i);
        std::vector<std::size_t> cols(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = j;
        return m.submatrix(rows, cols);
    }
};

/// Shift operator s: ones on the superdiagonal and (-1)^n in the corner.
/// Right-multiplication moves every column one step right, wrapping the last
/// column to the front with sign (-1)^n.
inline Mat shift_operator(int n) {
    Mat s(2 * n, 2 * n);
    for (int j = 0; j + 1 < 2 * n; ++j) s(j, j + 1) = 1;
    s(2 * n - 1, 0) = n % 2 == 0 ? 1 : -1;
    return s;
}

namespace detail {

/// Interleaves matrix entries with the cyclic 0/1 pattern:
/// entry(i, 2j-1) = (-1)^{i+j} x_ij; entry(i, 2j) = 1 for j in {i-1, i} mod n,
/// the wrap in row 1, column 2n carrying (-1)^n.
inline Mat omega_pattern(const Mat& x) {
    const int n = static_cast<int>(x.rows());
    Mat o(n, 2 * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            o(i - 1, 2 * j - 2) = ((i + j) % 2 == 0 ? x(i - 1, j - 1) : -x(i - 1, j - 1));
            if (j == i)
                o(i - 1, 2 * j - 1) = 1;
            else if (j % n == (i - 1) % n)
                o(i - 1, 2 * j - 1) = (i == 1 && n % 2 == 1) ? -1 : 1;
        }
    return o;
}

}  // namespace detail

inline OmegaMatrix build_omega_response(const Mat& x) {
    std::string why;
    if (!is_valid_response(x, &why)) throw InvalidResponseError("not a response matrix: " + why);
    return {detail::omega_pattern(x), OmegaForm::response};
}

/// Omega_R of a distance matrix, defined operationally as Omega(M(D)) shifted
/// one column right. Rows 1..n-1 then match the displayed resistance-form
/// pattern entry(i, 2j) = (-1)^{i+j} m_ij with ones at columns 2j+1, j in {i-1, i}.
/// Builds for any symmetric zero-diagonal D; sign conditions are judged later.
inline OmegaMatrix build_omega_resistance(const Mat& d, const CircularOrder& order) {
    const Mat md = m_of_d(d, order);
    const Mat base = detail::omega_pattern(md);
    const int n = static_cast<int>(base.rows());
    Mat shifted(n, 2 * n);
    const Rational wrap = n % 2 == 0 ? 1 : -1;
    for (int i = 0; i < n; ++i) {
        shifted(i, 0) = wrap * base(i, 2 * n - 1);
        for (int j = 1; j < 2 * n; ++j) shifted(i, j) = base(i, j - 1);
    }
    return {std::move(shifted), OmegaForm::resistance};
}

}  // namespace ohmgraph
