#include "coneforge/errors.hpp"

namespace coneforge {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::singular_element: return "SingularElement";
    case ErrorCode::not_in_cone: return "NotInCone";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::frame_incomplete: return "FrameIncomplete";
    case ErrorCode::not_idempotent: return "NotIdempotent";
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::tolerance_exceeded: return "ToleranceExceeded";
  }
  return "Unknown";
}

}  // namespace coneforge
