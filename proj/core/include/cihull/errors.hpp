#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cihull {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON syntax, missing keys, wrong value types).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid problem data (dimension mismatch, repeated points,
// an interval with lo > hi, and so on).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// Requested a result that only exists for a nonempty hull.
class EmptyHull : public Error {
 public:
  using Error::Error;
};

// Requested a result that only exists for a bounded hull.
class UnboundedHull : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured size cap.  `required` reports the
// cap that would have been needed.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t required)
      : Error(what), required(required) {}
  std::size_t required;
};

// A point could not be expressed in the affine hull of the given set.
class NotInAffineHull : public Error {
 public:
  using Error::Error;
};

// Coefficients summing to one admit no homothety description.
class GammaIsOne : public Error {
 public:
  using Error::Error;
};

// Operation requires affinely independent points.
class NotAffinelyIndependent : public Error {
 public:
  using Error::Error;
};

// Operation requires an irreducible interval family.
class NotIrreducible : public Error {
 public:
  using Error::Error;
};

// Operation requires the lower endpoint sum to stay below one.
class AlphaNotBelowOne : public Error {
 public:
  using Error::Error;
};

// A numerical routine lost too much precision to continue.
class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};

// Output format does not support the dimension at hand.
class DimensionUnsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace cihull
