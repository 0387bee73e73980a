#ifndef GIS_ERRORS_HPP_
#define GIS_ERRORS_HPP_

#include <stdexcept>

namespace gis {

// Base class of everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (graph, poset, map, pair or element grammar).
// Messages carry a 1-based line number where one applies.
struct ParseError : Error {
  using Error::Error;
};

// A name or index that does not refer to a vertex/edge of the graph at hand.
struct LookupError : Error {
  using Error::Error;
};

// An element whose paths are inconsistent with the graph, or an element
// passed where an idempotent is required.
struct InvalidElementError : Error {
  using Error::Error;
};

// A binary relation fed to a poset constructor that fails antisymmetry.
struct NotPartialOrderError : Error {
  using Error::Error;
};

// Precondition violations. The CLI maps these to exit status 2.
struct PreconditionError : Error {
  using Error::Error;
};

struct CyclicGraphError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct SizeGuardError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct BoundExceededError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotACongruenceError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotInjectiveError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotIsomorphismError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotSimpleAcyclicError : PreconditionError {
  using PreconditionError::PreconditionError;
};

}  // namespace gis

#endif  // GIS_ERRORS_HPP_
