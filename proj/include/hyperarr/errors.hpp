#pragma once

#include <stdexcept>
#include <string>

namespace hyperarr {

// Every failure raised by the library derives from Error so callers
// (notably the CLI exit-code mapping) can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYPERARR_ERROR(Name)                    \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what)      \
        : Error(#Name ": " + what) {}           \
  }

HYPERARR_ERROR(InvalidParams);
HYPERARR_ERROR(NonIntegerCoefficients);
HYPERARR_ERROR(WrongConstantTerm);
HYPERARR_ERROR(BudgetExceeded);
HYPERARR_ERROR(DegenerateModQ);
HYPERARR_ERROR(NotPrimitiveRoot);
HYPERARR_ERROR(FactorizationBudgetExceeded);
HYPERARR_ERROR(InvalidStep);
HYPERARR_ERROR(ThresholdNotFound);
HYPERARR_ERROR(ShapeViolation);
HYPERARR_ERROR(NotMultIndependent);
HYPERARR_ERROR(NonPrimePart);
HYPERARR_ERROR(ParseError);

#undef HYPERARR_ERROR

}  // namespace hyperarr
