#pragma once

#include <stdexcept>
#include <string>

namespace zetakit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define ZETAKIT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char* kind() const noexcept override { return #Name; }     \
  };

ZETAKIT_DEFINE_ERROR(DomainError)
ZETAKIT_DEFINE_ERROR(PoleError)
ZETAKIT_DEFINE_ERROR(ConditioningError)
ZETAKIT_DEFINE_ERROR(QuadratureError)
ZETAKIT_DEFINE_ERROR(PrecisionError)
ZETAKIT_DEFINE_ERROR(ForbiddenNodeError)
ZETAKIT_DEFINE_ERROR(IntegerBetaError)
ZETAKIT_DEFINE_ERROR(HypothesisError)
ZETAKIT_DEFINE_ERROR(BracketError)
ZETAKIT_DEFINE_ERROR(RootCountError)
ZETAKIT_DEFINE_ERROR(SingularSystemError)
ZETAKIT_DEFINE_ERROR(ConvergenceError)

#undef ZETAKIT_DEFINE_ERROR

}  // namespace zetakit
