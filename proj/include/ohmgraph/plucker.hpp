#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ohmgraph/circular_minors.hpp"
#include "ohmgraph/omega.hpp"
#include "ohmgraph/parallel.hpp"

namespace ohmgraph {

inline constexpr int kPluckerNodeCap = 8;

/// All Plucker coordinates of an Omega row space: one exact scalar per sorted
/// (n-1)-subset of the 2n columns, computed from the deleted-row matrix.
struct PluckerVector {
    int n = 0;  // boundary size; ambient is Gr(n-1, 2n)
    OmegaForm form = OmegaForm::response;
    int deleted_row = 1;
    std::vector<std::pair<std::vector<int>, Rational>> coords;  // key: sorted 1-based columns

    const Rational* find(const std::vector<int>& key) const {
        for (const auto& [k, v] : coords)
            if (k == key) return &v;
        return nullptr;
    }
};

inline std::vector<std::vector<int>> column_subsets(int n2, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n2 - k + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline PluckerVector plucker(const OmegaMatrix& o, int node_cap = kPluckerNodeCap) {
    const int n = o.n();
    if (n > node_cap) throw TooLargeError("plucker enumeration cap exceeded (n > cap)");
    const Mat base = o.deleted();
    const auto subsets = column_subsets(2 * n, n - 1);
    auto values = parallel_map<Rational>(subsets.size(), [&](std::size_t i) {
        std::vector<std::size_t> rows(n - 1), cols(n - 1);
        for (int t = 0; t < n - 1; ++t) {
            rows[t] = t;
            cols[t] = subsets[i][t] - 1;
        }
        return det(base.submatrix(rows, cols));
    });
    PluckerVector p;
    p.n = n;
    p.form = o.form;
    p.deleted_row = o.deleted_row();
    p.coords.reserve(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) p.coords.push_back({subsets[i], values[i]});
    return p;
}

/// Single requested coordinate; usable beyond the full-enumeration cap.
inline Rational plucker_coordinate(const OmegaMatrix& o, const std::vector<int>& columns) {
    const int n = o.n();
    if (static_cast<int>(columns.size()) != n - 1)
        throw ParseError("coordinate must pick n-1 columns");
    const Mat base = o.deleted();
    std::vector<std::size_t> rows(n - 1), cols(n - 1);
    for (int t = 0; t < n - 1; ++t) {
        if (columns[t] < 1 || columns[t] > 2 * n) throw ParseError("column out of range");
        rows[t] = t;
        cols[t] = columns[t] - 1;
    }
    return det(base.submatrix(rows, cols));
}

struct SignCertificate {
    enum class Sign { plus, minus, mixed };
    Sign sign = Sign::plus;
    // on mixed: one positive and one negative coordinate
    std::vector<int> positive_witness, negative_witness;

    bool nonnegative() const { return sign != Sign::mixed; }
    std::string to_symbol() const {
        return sign == Sign::plus ? "+" : sign == Sign::minus ? "-" : "mixed";
    }
};

/// Decides whether some global sign makes every coordinate non-negative.
inline SignCertificate certify_nonnegative(const PluckerVector& p) {
    SignCertificate cert;
    for (const auto& [key, v] : p.coords) {
        const int s = sign(v);
        if (s > 0 && cert.positive_witness.empty()) cert.positive_witness = key;
        if (s < 0 && cert.negative_witness.empty()) cert.negative_witness = key;
    }
    if (cert.positive_witness.empty() && cert.negative_witness.empty())
        throw AllZeroError("all Plucker coordinates vanish: not a Grassmannian point");
    if (!cert.positive_witness.empty() && !cert.negative_witness.empty())
        cert.sign = SignCertificate::Sign::mixed;
    else
        cert.sign = cert.negative_witness.empty() ? SignCertificate::Sign::plus
                                                  : SignCertificate::Sign::minus;
    return cert;
}

/// Columns {2,4,...,2n-2} (resistance form) or {1,3,...,2n-3} (response form).
inline std::vector<int> connectivity_coordinate(int n, OmegaForm form) {
    std::vector<int> key;
    for (int t = 1; t <= n - 1; ++t)
        key.push_back(form == OmegaForm::resistance ? 2 * t : 2 * t - 1);
    return key;
}

/// True when the connectivity indicator coordinate is nonzero.
inline bool connectivity_indicator(const PluckerVector& p) {
    const auto key = connectivity_coordinate(p.n, p.form);
    const Rational* v = p.find(key);
    return v != nullptr && *v != 0;
}

}  // namespace ohmgraph
