#include "xcomm/error.hpp"

namespace xcomm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonIncreasingPoints: return "NonIncreasingPoints";
    case ErrorCode::PointOutsideInterval: return "PointOutsideInterval";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::ZeroCellCount: return "ZeroCellCount";
    case ErrorCode::UnknownPiece: return "UnknownPiece";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::MapDoesNotDescend: return "MapDoesNotDescend";
    case ErrorCode::LiftInconsistent: return "LiftInconsistent";
    case ErrorCode::UnequalChildCounts: return "UnequalChildCounts";
    case ErrorCode::InfeasibleProfile: return "InfeasibleProfile";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace xcomm
