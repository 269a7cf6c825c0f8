#pragma once

#include <stdexcept>
#include <string>

namespace wedderkit {

// Stable numeric codes; the C boundary maps these 1:1.
enum class ErrorCode : int {
  parse_error = 1,
  group_too_large = 2,
  bound_exceeded = 3,
  not_normal = 4,
  not_cyclic_quotient = 5,
  not_solvable = 6,
  not_central_idempotent = 7,
  inconsistent_multiple = 8,
  oracle_mismatch = 9,
  io_error = 10,
  invalid_argument = 11,
  internal_error = 12,
  search_budget_exceeded = 13,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

#define WEDDERKIT_DEFINE_ERROR(Name, code)                          \
  class Name : public Error {                                       \
  public:                                                           \
    explicit Name(const std::string& what) : Error(code, what) {}   \
  }

WEDDERKIT_DEFINE_ERROR(ParseError, ErrorCode::parse_error);
WEDDERKIT_DEFINE_ERROR(GroupTooLarge, ErrorCode::group_too_large);
WEDDERKIT_DEFINE_ERROR(BoundExceeded, ErrorCode::bound_exceeded);
WEDDERKIT_DEFINE_ERROR(NotNormal, ErrorCode::not_normal);
WEDDERKIT_DEFINE_ERROR(NotCyclicQuotient, ErrorCode::not_cyclic_quotient);
WEDDERKIT_DEFINE_ERROR(NotSolvable, ErrorCode::not_solvable);
WEDDERKIT_DEFINE_ERROR(NotCentralIdempotent, ErrorCode::not_central_idempotent);
WEDDERKIT_DEFINE_ERROR(InconsistentMultiple, ErrorCode::inconsistent_multiple);
WEDDERKIT_DEFINE_ERROR(OracleMismatch, ErrorCode::oracle_mismatch);
WEDDERKIT_DEFINE_ERROR(IOError, ErrorCode::io_error);
WEDDERKIT_DEFINE_ERROR(InvalidArgument, ErrorCode::invalid_argument);
WEDDERKIT_DEFINE_ERROR(InternalError, ErrorCode::internal_error);
WEDDERKIT_DEFINE_ERROR(SearchBudgetExceeded, ErrorCode::search_budget_exceeded);

#undef WEDDERKIT_DEFINE_ERROR

}  // namespace wedderkit
