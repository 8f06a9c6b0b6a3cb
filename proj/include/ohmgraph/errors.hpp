#pragma once

#include <stdexcept>
#include <string>

namespace ohmgraph {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input could not be parsed or violates a format invariant.
struct ParseError : Error {
    using Error::Error;
};

/// An interior component of the graph has no path to a boundary node,
/// so the interior block of the Laplacian is singular.
struct InteriorSingularError : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    using Error::Error;
};

/// An enumeration cap (edge count, plucker ambient size, order search) was exceeded.
struct TooLargeError : Error {
    using Error::Error;
};

/// The requested local pattern is not present at the given site.
struct BadSiteError : Error {
    using Error::Error;
};

struct NotEmbeddedError : Error {
    using Error::Error;
};

/// The rotation system fails the Euler face count, or the outer face is malformed.
struct NotPlanarError : Error {
    using Error::Error;
};

struct NotKalmansonError : Error {
    using Error::Error;
};

struct InvalidResponseError : Error {
    using Error::Error;
};

/// Plucker vector with every coordinate zero: not a Grassmannian point.
struct AllZeroError : Error {
    using Error::Error;
};

/// tau = g + 1 is not a fixed-point-free involution (cactus or degenerate input).
struct NotInvolutionError : Error {
    using Error::Error;
};

struct DegenerateError : Error {
    using Error::Error;
};

/// Face 2-coloring of a chord arrangement is improper (lens in the diagram).
struct ColoringFailureError : Error {
    using Error::Error;
};

/// The medial core of the arrangement leaves boundary nodes glued or isolated.
struct BoundaryDegenerateError : Error {
    using Error::Error;
};

struct NotTerminatedError : Error {
    using Error::Error;
};

struct InconsistentError : Error {
    using Error::Error;
};

struct NonPositiveWeightError : Error {
    using Error::Error;
};

}  // namespace ohmgraph
