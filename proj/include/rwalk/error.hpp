#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rwalk {

enum class ErrorCode {
  InvalidParams,
  InvalidArgument,
  ZeroConstantTerm,
  BadConstantTerm,
  BadBand,
  TooLarge,
  SymmetricUnsupported,
  RegimeMismatch,
  MethodDisagreement,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as this one exception type; callers
// switch on code() rather than on the dynamic type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rwalk
