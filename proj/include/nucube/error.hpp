#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nucube {

enum class ErrorKind {
  DegreeOutOfRange,
  Parse,
  FuelExhausted,
  UnboundVariable,
  RuleNotInSystem,
  NotAFunction,
  DomainMismatch,
  RestrictionViolated,
  DuplicateSubject,
  TypeNotASort,
  ClassMismatch,
  FsdElementIllTyped,
  AscriptionNotConvertible,
  AscriptionNotSorted,
  FsdInLambdaMode,
  SortHasNoType,
  NotErasable,
  IndexOutOfRange,
  DegreeMismatch,
  FreshnessViolation,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace nucube
