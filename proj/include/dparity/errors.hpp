#pragma once

#include <stdexcept>
#include <string>

namespace dparity {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weierstrass equation with vanishing discriminant.
class SingularCurveError : public Error {
 public:
  using Error::Error;
};

class InvalidTransformError : public Error {
 public:
  using Error::Error;
};

/// A coordinate change produced non-integral coefficients.
class NonIntegralModelError : public Error {
 public:
  using Error::Error;
};

class InvalidGroupError : public Error {
 public:
  using Error::Error;
};

class DegeneratePairingError : public Error {
 public:
  using Error::Error;
};

class InadmissibleSettingError : public Error {
 public:
  using Error::Error;
};

class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

class CrtError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dparity
