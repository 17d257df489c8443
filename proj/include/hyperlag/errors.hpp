#pragma once

#include <stdexcept>
#include <string>

namespace hyperlag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge or set has the wrong cardinality for the hypergraph's uniformity.
class UniformityError : public Error {
 public:
  using Error::Error;
};

/// A link was requested for a vertex set that is too large.
class ArityError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A weighting does not cover the vertices used by the hypergraph.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested computation exceeds a desk-scale guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// symmetrize() was called on a pair that is not an automorphism of H.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperlag
