#pragma once

#include <stdexcept>
#include <string>

namespace carnot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NonSpanning : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Structural problems in a bracket table. what() carries the short form
// ("JacobiViolation(e1,e2,e3)") used by the CLI.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::string msg)
      : Error(std::move(msg)), i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

class GradingViolation : public Error {
 public:
  GradingViolation(std::size_t i, std::size_t j, std::string msg)
      : Error(std::move(msg)), i(i), j(j) {}
  std::size_t i, j;
};

class NotStratified : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class NotHorizontal : public Error {
 public:
  using Error::Error;
};

class OutsideHalfSpace : public Error {
 public:
  using Error::Error;
};

class UnsupportedStep : public Error {
 public:
  using Error::Error;
};

class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace carnot
