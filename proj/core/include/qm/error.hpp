#pragma once

#include <stdexcept>
#include <string>

namespace qm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonPolynomialResult : public Error {
 public:
  using Error::Error;
};

class SymbolNotPolynomial : public Error {
 public:
  using Error::Error;
};

class SymbolMismatch : public Error {
 public:
  using Error::Error;
};

class CommutatorNonzero : public Error {
 public:
  using Error::Error;
};

class ZeroSymbol : public Error {
 public:
  using Error::Error;
};

class SingularGram : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class CodimMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qm
