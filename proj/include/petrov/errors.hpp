#pragma once

#include <stdexcept>
#include <string>

namespace petrov {

enum class ErrorCode {
  NotSymmetric,
  NotAPlane,
  DegeneratePlane,
  NotComplexLinear,
  SignMismatch,
  ChartDomainExceeded,
  NotStarEinstein,
  BadEigenvalueCount,
  WrongFrame,
  ParseError,
  WrongEntryCount,
  UnknownSignature,
  VersionMismatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the curvature file reader. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace petrov
