#pragma once
// Exception taxonomy for the library. Every failure mode a caller can
// trigger gets its own type, so tests and the CLI can react to the class
// instead of string-matching messages.

#include <stdexcept>
#include <string>

namespace sfc {

// Common base; catch this to handle any library error.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unknown, duplicate or malformed solution/instance identifier.
struct IdentifierError : Error { using Error::Error; };

// Guarantee pair violates the sense order (needs C >= S when maximizing,
// C <= S when minimizing).
struct GuaranteeOrderError : Error { using Error::Error; };

// A catalog generator was asked for a family too large to enumerate.
struct ScaleError : Error { using Error::Error; };

// Dimension mismatch between matrices, vectors or index lists.
struct ShapeError : Error { using Error::Error; };

// A slack entry came out negative, so the guarantee does not dominate the
// objective on some sound instance.
struct GuaranteeInfeasibleError : Error { using Error::Error; };

// The polyhedron {x : Ax <= b} is empty where a nonempty one is required.
struct EmptyPolyhedronError : Error { using Error::Error; };

// An affine function takes a negative value somewhere on the polyhedron;
// the message carries a witness point.
struct NotNonnegativeError : Error { using Error::Error; };

// A matrix required to be positive semidefinite is not; the message names
// the offending factor and the certificate vector.
struct NotPsdError : Error { using Error::Error; };

// A linear formulation fails one of its three defining conditions; the
// message names which one (containment, linearization, objective-bound).
struct FormulationInvalidError : Error { using Error::Error; };

// A claimed factorization does not reproduce the slack matrix, or violates
// nonnegativity/psd-ness of its factors.
struct FactorizationInvalidError : Error { using Error::Error; };

// A point-map reduction breaks its affine value identity or size ratio;
// the message carries the first witness (instance, solution).
struct SimpleReductionInvalidError : Error { using Error::Error; };

// An internal cross-check failed. Indicates a bug, not bad input.
struct InternalConsistencyError : Error { using Error::Error; };

} // namespace sfc
