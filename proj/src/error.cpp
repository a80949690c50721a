#include "bcgim/error.hpp"

namespace bcgim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Dimension: return "dimension";
    case ErrorCode::InvalidRoot: return "invalid-root";
    case ErrorCode::Rank: return "rank";
    case ErrorCode::UnsupportedRoot: return "unsupported-root";
    case ErrorCode::IndexRange: return "index-range";
    case ErrorCode::ContextMismatch: return "context-mismatch";
    case ErrorCode::Completion: return "completion";
    case ErrorCode::SpecMismatch: return "spec-mismatch";
    case ErrorCode::UnknownGenerator: return "unknown-generator";
    case ErrorCode::UnsupportedTarget: return "unsupported-target";
    case ErrorCode::ConstructionBug: return "construction-bug";
    case ErrorCode::MalformedDocument: return "malformed-document";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace bcgim
