#pragma once

#include <stdexcept>
#include <string>

namespace otl {

enum class ErrorKind {
  Parse,
  ArityMismatch,
  OutOfRange,
  NotInImage,
  NotBipartite,
  Disconnected,
  MissingColoring,
  Unoriented,
  NotOrientedPositive,
  MoveSearchFailed,
  BudgetExceeded,
  PatternMismatch,
  NonLaminar,
  InvalidDiagram,
  Internal,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  const char* name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace otl
