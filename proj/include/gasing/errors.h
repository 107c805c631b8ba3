#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gasing {

// Base of every error raised by the engine. The CLI maps these onto exit
// codes: VerificationError -> 2, everything else -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (negative radicand, sin = 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Division by an exact zero, sign determination that cannot be settled.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Inconsistent gluing or missing data while building a figure.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A construction could not be embedded in the plane for given angle values.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Numeric evaluation hit a vanishing denominator.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// A certificate failed to recompose, or two derivation routes disagree.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// The reduction modulo cos^2 + sin^2 - 1 was requested inside a proof.
class CircularityError : public Error {
 public:
  using Error::Error;
};

// Angle or radical outside what the exact number tower can represent.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("parse error at offset " + std::to_string(offset) + ": " +
              message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gasing
