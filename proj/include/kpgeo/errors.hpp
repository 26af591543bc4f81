#pragma once

#include <stdexcept>

namespace kpgeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input fails a structural invariant (anti-Hermiticity, unitarity,
/// subspace membership, ...).
struct ValidationError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

/// Argument outside the operation's stated range (e.g. sample time past t_max).
struct DomainError : Error {
  using Error::Error;
};

/// Chart operation evaluated at a singular point (|z| = 1 on the disc).
struct SingularPointError : Error {
  using Error::Error;
};

/// Iterative procedure failed to converge.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace kpgeo
