#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symnc {

enum class ErrorCode {
  MemberNotInSubset,
  InvalidRange,
  StageOutOfRange,
  NotAStageMember,
  ConditionNotSatisfied,
  CapExceeded,
  DegenerateEmbedding,
  ComplexInconsistent,
  OrientationInconsistent,
  NotAnAutomorphism,
  UnsupportedFormat,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the leading code name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace symnc
