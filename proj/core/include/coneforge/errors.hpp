#pragma once

#include <stdexcept>
#include <string>

namespace coneforge {

enum class ErrorCode {
  dimension_mismatch,
  singular_element,
  not_in_cone,
  no_convergence,
  frame_incomplete,
  not_idempotent,
  invalid_input,
  index_out_of_range,
  tolerance_exceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// Base of every exception thrown by coneforge.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define CONEFORGE_DEFINE_ERROR(Name, Code)                                      \
  class Name : public Error {                                                   \
   public:                                                                      \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {}    \
  };

CONEFORGE_DEFINE_ERROR(DimensionMismatch, dimension_mismatch)
CONEFORGE_DEFINE_ERROR(SingularElement, singular_element)
CONEFORGE_DEFINE_ERROR(NotInCone, not_in_cone)
CONEFORGE_DEFINE_ERROR(NoConvergence, no_convergence)
CONEFORGE_DEFINE_ERROR(FrameIncomplete, frame_incomplete)
CONEFORGE_DEFINE_ERROR(NotIdempotent, not_idempotent)
CONEFORGE_DEFINE_ERROR(InvalidInput, invalid_input)
CONEFORGE_DEFINE_ERROR(IndexOutOfRange, index_out_of_range)
CONEFORGE_DEFINE_ERROR(ToleranceExceeded, tolerance_exceeded)

#undef CONEFORGE_DEFINE_ERROR

}  // namespace coneforge
