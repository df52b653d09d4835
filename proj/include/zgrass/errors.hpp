#pragma once

#include <stdexcept>
#include <string>

namespace zgr {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched degree lengths, incompatible tables or truncation orders.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Inversion of a series whose body is the zero rational function.
class ZeroBody : public Error {
 public:
  using Error::Error;
};

/// Inversion of a supermatrix whose body determinant vanishes identically.
class SingularBody : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidTruncation : public Error {
 public:
  using Error::Error;
};

/// k > m somewhere, wrong block count, or an otherwise unusable shape.
class InvalidShape : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zgr
