#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppav {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct OddDimension : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct NotSymplectic : Error {
  using Error::Error;
};
struct NotInvolution : Error {
  using Error::Error;
};
// Raised when a derived quantity contradicts an identity that must hold;
// always a bug in this library, never valid input.
struct InternalInconsistency : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  std::size_t partial_size;
  CapExceeded(const std::string& msg, std::size_t n) : Error(msg), partial_size(n) {}
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct SingularFactor : Error {
  using Error::Error;
};
struct ImaginaryPartNotPositiveDefinite : Error {
  using Error::Error;
};
struct StratumMismatch : Error {
  using Error::Error;
};
struct OddG : Error {
  using Error::Error;
};
struct EvenG : Error {
  using Error::Error;
};
struct NotPrime : Error {
  using Error::Error;
};
struct EvenModulus : Error {
  using Error::Error;
};
struct HyperellipticCase : Error {
  using Error::Error;
};
struct VerificationFailed : Error {
  using Error::Error;
};

}  // namespace ppav
