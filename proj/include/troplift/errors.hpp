#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace troplift {

/// Raised when an algorithm's mathematical preconditions fail or a
/// computation cannot proceed (maps to CLI exit code 1).
class DomainError : public std::runtime_error {
 public:
  enum class Kind {
    Generic,
    DivisionByZero,
    NotInTropicalVariety,
    NotShapePosition,
    ExtensionTowerUnsupported,
    NoTorusZero,
    NotCurveType,
    NoNegativeRay,
    IterationCapExceeded,
    DegreeCapExceeded,
    Reducible,
  };

  DomainError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  explicit DomainError(const std::string& what)
      : DomainError(Kind::Generic, what) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Malformed textual input (maps to CLI exit code 2). Line 0 means a
/// command line value rather than a position in the file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(line == 0 ? msg
                                     : "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace troplift
