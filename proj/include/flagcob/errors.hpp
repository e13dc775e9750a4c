#pragma once

#include <stdexcept>
#include <string>

namespace flagcob {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input validation
struct InvalidLetter : Error { using Error::Error; };
struct InvalidIndex : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };
struct InvalidInterval : Error { using Error::Error; };
struct InvalidMove : Error { using Error::Error; };
struct InvalidField : Error { using Error::Error; };
struct NotReduced : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct Mismatch : Error { using Error::Error; };
struct UnsupportedTheory : Error { using Error::Error; };
struct NoPointClass : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// math invariants that should never fire on valid input
struct InternalError : Error { using Error::Error; };

// stable-family compatibility failed under the rank-lowering pullback
struct StabilityViolation : Error { using Error::Error; };

} // namespace flagcob
