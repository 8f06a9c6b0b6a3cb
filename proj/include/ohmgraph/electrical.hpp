#pragma once

#include <optional>
#include <string>

#include "ohmgraph/circular_minors.hpp"
#include "ohmgraph/plucker.hpp"
#include "ohmgraph/splits.hpp"

namespace ohmgraph {

/// Verdict of an electrical-Kalmanson test. On yes, dual_response carries M(D),
/// the response matrix of the dual network.
struct ElectricalDecision {
    bool yes = false;
    std::string reason;
    Mat dual_response;
    // grassmannian route extras
    std::optional<Rational> indicator;                       // Delta_{24...2n-2}
    std::vector<int> positive_witness, negative_witness;     // mixed-sign witness
    // dual route extras
    std::optional<CircularMinorResult> minor_witness;
};

namespace detail {

inline void require_kalmanson(const Mat& d, const CircularOrder& order) {
    const auto met = check_metric(d, /*allow_pseudometric=*/true);
    if (!met.ok()) throw NotKalmansonError("input is not a (pseudo)metric");
    const auto kal = kalmanson_check(d, order);
    if (!kal.ok)
        throw NotKalmansonError("Kalmanson inequality " + std::to_string(kal.inequality) +
                                " fails on quadruple (" + std::to_string(kal.quadruple[0]) + "," +
                                std::to_string(kal.quadruple[1]) + "," +
                                std::to_string(kal.quadruple[2]) + "," +
                                std::to_string(kal.quadruple[3]) + ")");
}

}  // namespace detail

/// Decides whether D is the resistance matrix of a connected circular planar
/// network by testing its dual-response candidate M(D): rank n-1 plus
/// non-negative signed circular minors.
inline ElectricalDecision is_electrical_via_dual(const Mat& d, const CircularOrder& order) {
    detail::require_kalmanson(d, order);
    ElectricalDecision out;
    out.dual_response = m_of_d(d, order);
    const auto res = circular_minor_test(out.dual_response);
    if (res.ok()) {
        out.yes = true;
        return out;
    }
    out.minor_witness = res;
    switch (res.status) {
        case CircularMinorResult::Status::rank_defect:
            out.reason = "rank of M(D) is below n-1 (cactus boundary case)";
            break;
        case CircularMinorResult::Status::negative_minor:
            out.reason = "a signed circular minor of M(D) is negative";
            break;
        default:
            out.reason = "M(D) violates response matrix preconditions";
    }
    return out;
}

/// Decides the same question through the Grassmannian embedding: the Plucker
/// coordinates of Omega_R(D) must share one sign and the connectivity
/// coordinate Delta_{24...2n-2} must not vanish.
inline ElectricalDecision is_electrical_via_grassmannian(const Mat& d, const CircularOrder& order,
                                                         int node_cap = kPluckerNodeCap) {
    detail::require_kalmanson(d, order);
    ElectricalDecision out;
    out.dual_response = m_of_d(d, order);
    const OmegaMatrix omega = build_omega_resistance(d, order);
    const PluckerVector p = plucker(omega, node_cap);
    out.indicator = *p.find(connectivity_coordinate(p.n, p.form));
    SignCertificate cert;
    try {
        cert = certify_nonnegative(p);
    } catch (const AllZeroError&) {
        out.reason = "all Plucker coordinates vanish";
        return out;
    }
    if (!cert.nonnegative()) {
        out.positive_witness = cert.positive_witness;
        out.negative_witness = cert.negative_witness;
        out.reason = "Plucker coordinates carry mixed signs";
        return out;
    }
    if (*out.indicator == 0) {
        out.reason = "connectivity coordinate Delta_{24...2n-2} vanishes (cactus boundary case)";
        return out;
    }
    out.yes = true;
    return out;
}

}  // namespace ohmgraph
