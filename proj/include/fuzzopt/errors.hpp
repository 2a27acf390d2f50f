#pragma once

#include <stdexcept>
#include <string>

namespace fuzzopt {

/// Base class for every error the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numeric argument fell outside its admissible range (membership level
/// outside [0,1], unordered interval endpoints, bad multipliers, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Vector/matrix arity did not match the expected dimension.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A level-wise interval family is not nested, so it cannot be read back
/// as a fuzzy number.
struct NotAFuzzyNumber : Error {
  using Error::Error;
};

/// A point violates constraints it was required to satisfy.
struct InfeasiblePoint : Error {
  using Error::Error;
};

/// A level-wise interval intersection came out empty.
struct EmptyIntersection : Error {
  using Error::Error;
};

/// Support-vector bias windows have empty intersection already at level 0.
struct EmptyBias : Error {
  using Error::Error;
};

/// No candidate separator was accepted.
struct NoSeparator : Error {
  using Error::Error;
};

/// The simplex iteration guard tripped.
struct LpFailure : Error {
  using Error::Error;
};

/// Input did not match the expected schema; `path` names the offending field.
struct SchemaError : Error {
  SchemaError(const std::string& field_path, const std::string& message)
      : Error(field_path + ": " + message), path(field_path) {}
  std::string path;
};

}  // namespace fuzzopt
