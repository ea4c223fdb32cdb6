#pragma once

#include <stdexcept>
#include <string>

namespace mgp {

// Every error raised by the library carries a stable kind name so the CLI can
// report it verbatim and map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Raised by model validation; CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

#define MGP_DEFINE_ERROR(Name, Base)                                   \
  class Name : public Base {                                           \
   public:                                                             \
    explicit Name(const std::string& what) : Base(#Name, what) {}      \
  };

MGP_DEFINE_ERROR(RowSumError, ValidationError)
MGP_DEFINE_ERROR(EmptyColumnError, ValidationError)
MGP_DEFINE_ERROR(BadAlpha, ValidationError)
MGP_DEFINE_ERROR(BadVariogram, ValidationError)
MGP_DEFINE_ERROR(BadMass, ValidationError)
MGP_DEFINE_ERROR(ShapeError, ValidationError)
MGP_DEFINE_ERROR(BadCoefficient, ValidationError)

MGP_DEFINE_ERROR(NotPositiveDefinite, Error)
MGP_DEFINE_ERROR(ToleranceNotReached, Error)
MGP_DEFINE_ERROR(NegativeInput, Error)
MGP_DEFINE_ERROR(QuadratureFailure, Error)
MGP_DEFINE_ERROR(RejectionBudgetExceeded, Error)
MGP_DEFINE_ERROR(PreconditionError, Error)
MGP_DEFINE_ERROR(ParseError, Error)

#undef MGP_DEFINE_ERROR

}  // namespace mgp
