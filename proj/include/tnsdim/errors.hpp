#pragma once

#include <stdexcept>
#include <string>

namespace tnsdim {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(unsigned long long p) : Error("modulus " + std::to_string(p) + " is not prime") {}
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class BadSubset : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class BadShape : public Error {
 public:
  using Error::Error;
};

class BadRank : public Error {
 public:
  using Error::Error;
};

class ZeroTensor : public Error {
 public:
  ZeroTensor() : Error("isotropy of the zero tensor is undefined") {}
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Lower bound exceeded upper bound: a bug or an unlucky prime.
class BoundInversion : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace tnsdim
