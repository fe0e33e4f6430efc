#pragma once

#include <stdexcept>
#include <string>

namespace kanto {

enum class ErrorCode {
  kNotSquare,
  kNotSymmetric,
  kNotPositiveDefinite,
  kNonFinite,
  kNoConvergence,
  kDimensionMismatch,
  kZeroVector,
  kBadInitialBracket,
  kParse,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kanto
