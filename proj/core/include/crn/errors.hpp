#pragma once

#include <stdexcept>
#include <string>

namespace crn {

enum class ErrorCode {
  DuplicateVertex,
  DuplicateEdge,
  SelfLoop,
  IsolatedVertex,
  DimensionMismatch,
  BudgetExceeded,
  SolverFailure,
  ConvergenceFailure,
  NotSubgraph,
  NotWeaklyReversible,
  NotMember,
  ClassMismatch,
  MembershipFailure,
  CertificationFailure,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::NotWeaklyReversible: return "NotWeaklyReversible";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::MembershipFailure: return "MembershipFailure";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace crn
