#pragma once

#include <stdexcept>
#include <string>

namespace modcurve {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// A rational (or number field element) has a denominator divisible by p.
class NotPIntegral : public Error {
 public:
  using Error::Error;
};

// Numeric square root reconstruction in K was inconclusive at the maximum precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class DegenerateInvolution : public Error {
 public:
  using Error::Error;
};

class NotSplit : public Error {
 public:
  using Error::Error;
};

class Inconsistent : public Error {
 public:
  using Error::Error;
};

class PointNotOnCurve : public Error {
 public:
  using Error::Error;
};

class UnsupportedForm : public Error {
 public:
  using Error::Error;
};

class ClosureBoundExceeded : public Error {
 public:
  using Error::Error;
};

class BadReduction : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace modcurve
