#pragma once

#include <stdexcept>
#include <string>

namespace schemegb {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& where)
      : Error(where + ": zero polynomial") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Input does not describe a (commutative, symmetric) association scheme.
class SchemeError : public Error {
 public:
  using Error::Error;
};

class NotAPartition : public SchemeError {
 public:
  using SchemeError::SchemeError;
};

class NotSymmetric : public SchemeError {
 public:
  using SchemeError::SchemeError;
};

class NotCommutative : public SchemeError {
 public:
  using SchemeError::SchemeError;
};

class NotConstantIntersectionNumber : public SchemeError {
 public:
  NotConstantIntersectionNumber(int i, int j, int k, const std::string& witness)
      : SchemeError("intersection number p_" + std::to_string(i) + std::to_string(j) + "^" +
                    std::to_string(k) + " is not constant: " + witness),
        i(i), j(j), k(k) {}
  int i, j, k;
};

class InvalidRadix : public SchemeError {
 public:
  using SchemeError::SchemeError;
};

// Raised by back-substitution when a lex basis is not triangular enough to
// solve with the current coordinates.
class NotTriangularEnough : public Error {
 public:
  using Error::Error;
};

class NotExpressible : public Error {
 public:
  explicit NotExpressible(int variable)
      : Error("variable x" + std::to_string(variable) + " is not expressible"),
        variable(variable) {}
  int variable;
};

class AttemptsExhausted : public Error {
 public:
  using Error::Error;
};

class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace schemegb
