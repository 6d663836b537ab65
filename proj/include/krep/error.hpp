#pragma once

#include <stdexcept>
#include <string>

namespace krep {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kIo,
  kNotLinear,
  kRetriesExhausted,
  kParameterUnderflow,
  kCapExceeded,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library. Violation reports are returned as
// data; only contract breaches and exhausted searches throw.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace krep
