#pragma once

#include <stdexcept>
#include <string>

namespace ainfty {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArity : public Error {
 public:
  using Error::Error;
};

/// Malformed level structure, tree encoding or monomial shape.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Composition of terms whose outputs and inputs disagree.
class BiarityError : public Error {
 public:
  using Error::Error;
};

class TransversalityError : public Error {
 public:
  using Error::Error;
};

class TableBoundError : public Error {
 public:
  using Error::Error;
};

/// The chain-map solver found no admissible diagonal on a top cell.
class DiagonalConstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace ainfty
