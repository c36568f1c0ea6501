#pragma once

#include <stdexcept>
#include <string>

namespace nckc {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x <= 0 for
// log-gamma, a pole, E <= 0 for a scattering state, coincident directions).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Quantum numbers that violate the parity/ordering constraints of a channel.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// The requested level j lies below the channel threshold s1+s2+s3.
class NoStateError : public Error {
 public:
  using Error::Error;
};

// Requested size above a configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An integrand or kernel produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// A finite-difference stencil would leave the open domain.
class GeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace nckc
