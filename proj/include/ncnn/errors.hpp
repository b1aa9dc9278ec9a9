#pragma once

#include <stdexcept>
#include <string>

namespace ncnn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankError : Error { using Error::Error; };
struct NonRootArgument : Error { using Error::Error; };
struct NotAntichain : Error { using Error::Error; };
struct MembershipError : Error { using Error::Error; };
struct BadCut : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };
struct PredicateViolation : Error { using Error::Error; };
struct BadArity : Error { using Error::Error; };
struct InvalidStatistics : Error { using Error::Error; };
struct NotNoncrossing : Error { using Error::Error; };
struct InvalidTags : Error { using Error::Error; };
struct UnsupportedCombination : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Raised when an internal step that validation should have made impossible
// fails anyway.  Always a defect, never a user error.
struct InternalContradiction : Error { using Error::Error; };

}  // namespace ncnn
