#pragma once

#include <stdexcept>
#include <string>

namespace askey {

// Base class for every error raised by the library. Verification failures
// are not errors: they are reported as data in a VerificationReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exact-algebra
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

class VariableMismatch : public Error {
 public:
  VariableMismatch() : Error("Laurent polynomials in different variables") {}
};

class ZeroScale : public Error {
 public:
  ZeroScale() : Error("substitute_scale with zero factor") {}
};

class NegativeExponent : public Error {
 public:
  NegativeExponent() : Error("substitute_shift on a polynomial with negative exponents") {}
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  NotSquare() : Error("determinant of a non-square or empty matrix") {}
};

// family-catalog
class UnboundParameter : public Error {
 public:
  using Error::Error;
};

class InvalidBinding : public Error {
 public:
  using Error::Error;
};

class NotIdQM : public Error {
 public:
  using Error::Error;
};

class ConversionFailure : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// christoffel-engine
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class NonRealParameter : public Error {
 public:
  using Error::Error;
};

// numeric-verify
class NonPhysicalBinding : public Error {
 public:
  using Error::Error;
};

class QuadratureNonConvergence : public Error {
 public:
  using Error::Error;
};

// cli-report
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace askey
