#pragma once

#include <stdexcept>
#include <string>

namespace ksc {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input file could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

// Graph fails structural validation (self-loop, duplicate edge, bad index,
// nonpositive weight, n < 2).
struct InvalidGraph : Error {
  using Error::Error;
};

// Fiedler value below tolerance: the graph is not connected.
struct NotConnected : Error {
  using Error::Error;
};

// Vector/matrix sizes do not match the graph or each other.
struct DimensionMismatch : Error {
  using Error::Error;
};

// A cycle sum failed the 2*pi-integrality assertion. Signals a numerical or
// orientation bug, never valid data.
struct NonIntegerWinding : Error {
  using Error::Error;
};

// Cohesiveness level outside [0, pi].
struct InvalidGamma : Error {
  using Error::Error;
};

// Parameter outside its admissible range (phi, gamma, grid specs, ...).
struct InvalidRange : Error {
  using Error::Error;
};

// Projector dimension < 2.
struct InvalidDimension : Error {
  using Error::Error;
};

// Matrix does not keep span(1) invariant; the induced seminorm limit is not
// computable through the R-compression.
struct KernelNotInvariant : Error {
  using Error::Error;
};

// Integration produced a non-finite state.
struct NonFiniteState : Error {
  using Error::Error;
};

// Least-squares residual of the cell projection exceeded tolerance.
struct InconsistentCell : Error {
  using Error::Error;
};

// A non-tree edge failed the mod-2*pi consistency check during lifting.
struct CycleInconsistent : Error {
  using Error::Error;
};

// State is not gamma-cohesive where cohesiveness is required.
struct NotCohesive : Error {
  using Error::Error;
};

// Newton matrix is rank-deficient beyond tolerance.
struct SingularJacobian : Error {
  using Error::Error;
};

// Newton iteration exhausted its budget without converging.
struct MaxIterations : Error {
  using Error::Error;
};

}  // namespace ksc
