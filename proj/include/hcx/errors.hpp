#pragma once

#include <stdexcept>
#include <string>

namespace hcx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// A function was evaluated outside its domain (sqrt of a non-positive
/// value, coth at 0, a point outside a chart guard, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class SingularMetric : public Error {
public:
  using Error::Error;
};

class SingularFrame : public Error {
public:
  using Error::Error;
};

/// Commutators of a matrix basis do not close in its span.
class NotClosed : public Error {
public:
  using Error::Error;
};

class IncompatibleStructure : public Error {
public:
  IncompatibleStructure(int alpha, double magnitude, const std::string& what)
      : Error(what), alpha_(alpha), magnitude_(magnitude) {}

  /// 1-based index of the offending J.
  int alpha() const noexcept { return alpha_; }
  double magnitude() const noexcept { return magnitude_; }

private:
  int alpha_;
  double magnitude_;
};

class DegenerateSection : public Error {
public:
  using Error::Error;
};

class NoAdmissibleSection : public Error {
public:
  using Error::Error;
};

class TheoremViolation : public Error {
public:
  using Error::Error;
};

class UnknownExample : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

/// Malformed declarative manifold text or expression.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace hcx
