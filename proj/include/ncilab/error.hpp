#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncilab {

enum class ErrorKind {
  ParseError,
  NotSquarefree,
  EmptyIdeal,
  UnitIdeal,
  UnknownVertex,
  DuplicateLabel,
  NotAHyperedge,
  NotJoinable,
  NotAGraph,
  TooSmall,
  Disconnected,
  BudgetExceeded,
  NotNci,
  DegreeTooLow,
  EmptyTable,
  Schema,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error the toolkit raises. The kind name is part of the
/// service contract (it is echoed in HTTP 422 bodies).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ncilab
