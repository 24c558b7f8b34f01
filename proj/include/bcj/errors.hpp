#pragma once

#include <stdexcept>
#include <string>

namespace bcj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  using Error::Error;
};
class GenusError : public Error {
  using Error::Error;
};
class SpineError : public Error {
  using Error::Error;
};
class BasisError : public Error {
  using Error::Error;
};
class MatrixError : public Error {
  using Error::Error;
};
class FiltrationError : public Error {
  using Error::Error;
};
class GeometryError : public Error {
  using Error::Error;
};
class ArgumentError : public Error {
  using Error::Error;
};
class DisjointnessError : public Error {
  using Error::Error;
};
/// Linking matrix violates L^T - L = J.
class ConsistencyError : public Error {
  using Error::Error;
};
class OverflowError : public Error {
  using Error::Error;
};
/// Malformed JSON or text input.
class SchemaError : public Error {
  using Error::Error;
};

}  // namespace bcj
