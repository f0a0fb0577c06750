#ifndef MONOWALK_ERROR_HPP_
#define MONOWALK_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace monowalk {

  enum class ErrorKind {
    InvalidInput,
    DimensionMismatch,
    NotStochastic,
    NotAdapted,
    NotReduced,
    NotReducedForW0,
    UnsupportedType,
    UnknownModel,
    PreconditionViolated,
    CapExceeded,
    BudgetExceeded,
    NotRTrivial,
    NotLRB,
    NotKarnofskyRhodes,
    NotErgodic,
    NoConstants,
    MultiplicityMismatch
  };

  // Validation problems and resource limits are separate from mathematical
  // failures; the CLI maps these to exit codes 2, 3 and 4.
  enum class ErrorClass { Validation, Budget, Property };

  std::string_view error_kind_name(ErrorKind kind) noexcept;
  ErrorClass       error_class(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message)
        : std::runtime_error(message), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] void raise(ErrorKind kind, std::string const& message);

}  // namespace monowalk

#endif  // MONOWALK_ERROR_HPP_
