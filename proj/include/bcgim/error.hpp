#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcgim {

enum class ErrorCode {
  Dimension = 10,
  InvalidRoot = 11,
  Rank = 12,
  UnsupportedRoot = 13,
  IndexRange = 14,
  ContextMismatch = 15,
  Completion = 16,
  SpecMismatch = 17,
  UnknownGenerator = 18,
  UnsupportedTarget = 19,
  ConstructionBug = 20,
  MalformedDocument = 30,
  InvalidConfig = 31,
  Io = 32,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them to distinct process exit statuses.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace bcgim
