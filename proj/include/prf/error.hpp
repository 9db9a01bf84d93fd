#pragma once

#include <stdexcept>
#include <string>

namespace prf {

enum class ErrorKind {
  Parse,
  ZeroPolynomial,
  VariableClash,
  NonSquareSystem,
  EndpointIsRoot,
  ResourceBudgetExceeded,
  NotZeroDimensional,
  NotZeroDimensionalFiber,
  UnknownQuantity,
  NonSquareAfterElimination,
  NotFound,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library. `stage()` names the pipeline step
/// that failed ("dv", "zdsat", ...) and is empty for low-level errors until an
/// orchestrator tags it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string stage = {})
      : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

  Error with_stage(std::string stage) const { return Error(kind_, what(), std::move(stage)); }

 private:
  ErrorKind kind_;
  std::string stage_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorKind::Parse, format(message, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }
  int line_;
  int column_;
};

}  // namespace prf
