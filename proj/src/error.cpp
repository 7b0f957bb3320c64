#include "ncilab/error.hpp"

namespace ncilab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::EmptyIdeal: return "EmptyIdeal";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NotAHyperedge: return "NotAHyperedge";
    case ErrorKind::NotJoinable: return "NotJoinable";
    case ErrorKind::NotAGraph: return "NotAGraph";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotNci: return "NotNci";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorKind::ParseError,
            "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace ncilab
