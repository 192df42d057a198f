// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_ERRORS_HPP
#define CORRLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corrlift {

/// Base class for all corrlift errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CORRLIFT_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

// Argument and dimension violations.
CORRLIFT_DEFINE_ERROR(InvalidArgument);
CORRLIFT_DEFINE_ERROR(DimensionMismatch);
CORRLIFT_DEFINE_ERROR(BadSplit);
CORRLIFT_DEFINE_ERROR(TooShort);
CORRLIFT_DEFINE_ERROR(DegreeTooSmall);
CORRLIFT_DEFINE_ERROR(EmptyInput);
CORRLIFT_DEFINE_ERROR(TooFewPoints);

// Degenerate data.
CORRLIFT_DEFINE_ERROR(ZeroEstimate);
CORRLIFT_DEFINE_ERROR(ZeroReference);
CORRLIFT_DEFINE_ERROR(ZeroPowerInput);
CORRLIFT_DEFINE_ERROR(ZeroMatrix);
CORRLIFT_DEFINE_ERROR(ZeroLeadingEntry);
CORRLIFT_DEFINE_ERROR(DegenerateSignal);

// Numerical failures.
CORRLIFT_DEFINE_ERROR(RejectionBudgetExceeded);
CORRLIFT_DEFINE_ERROR(RankAmbiguity);
CORRLIFT_DEFINE_ERROR(EigenFailure);

// I/O and configuration.
CORRLIFT_DEFINE_ERROR(ParseError);
CORRLIFT_DEFINE_ERROR(IoError);

#undef CORRLIFT_DEFINE_ERROR

}  // namespace corrlift

#endif  // CORRLIFT_ERRORS_HPP
