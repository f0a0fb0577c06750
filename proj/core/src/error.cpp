#include "monowalk/error.hpp"

namespace monowalk {

  std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::InvalidInput: return "InvalidInput";
      case ErrorKind::DimensionMismatch: return "DimensionMismatch";
      case ErrorKind::NotStochastic: return "NotStochastic";
      case ErrorKind::NotAdapted: return "NotAdapted";
      case ErrorKind::NotReduced: return "NotReduced";
      case ErrorKind::NotReducedForW0: return "NotReducedForW0";
      case ErrorKind::UnsupportedType: return "UnsupportedType";
      case ErrorKind::UnknownModel: return "UnknownModel";
      case ErrorKind::PreconditionViolated: return "PreconditionViolated";
      case ErrorKind::CapExceeded: return "CapExceeded";
      case ErrorKind::BudgetExceeded: return "BudgetExceeded";
      case ErrorKind::NotRTrivial: return "NotRTrivial";
      case ErrorKind::NotLRB: return "NotLRB";
      case ErrorKind::NotKarnofskyRhodes: return "NotKarnofskyRhodes";
      case ErrorKind::NotErgodic: return "NotErgodic";
      case ErrorKind::NoConstants: return "NoConstants";
      case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
    }
    return "Unknown";
  }

  ErrorClass error_class(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::CapExceeded:
      case ErrorKind::BudgetExceeded: return ErrorClass::Budget;
      case ErrorKind::NotRTrivial:
      case ErrorKind::NotLRB:
      case ErrorKind::NotKarnofskyRhodes:
      case ErrorKind::NotErgodic:
      case ErrorKind::NoConstants:
      case ErrorKind::MultiplicityMismatch: return ErrorClass::Property;
      default: return ErrorClass::Validation;
    }
  }

  void raise(ErrorKind kind, std::string const& message) {
    throw Error(kind, message);
  }

}  // namespace monowalk
