#pragma once

#include <stdexcept>
#include <string>

namespace dephasing {

/// Base class of all library exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A physical parameter violates its domain (non-positive density,
/// Bohr radius not inside the donor separation, negative temperature, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Unknown name in an embedded registry. The message lists valid entries.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Malformed key/value input (config file or command-line override).
/// The message names the offending key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The two-pole closed form was evaluated with (near-)equal relative Bohr
/// radii, where it divides by eta_+^2 - eta_-^2. Callers should go through
/// gamma(), which switches to the equal-radii branch.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A quadrature did not reach the requested tolerance within the allowed
/// subdivisions. Carries the best value and the achieved error estimate.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double value, double achieved,
                  double requested)
      : Error(what), value(value), achieved_error(achieved),
        requested_error(requested) {}
  double value;
  double achieved_error;
  double requested_error;
};

/// An internal cross-check failed (e.g. a result that must be real came out
/// with a significant imaginary part).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dephasing
