#pragma once

#include <stdexcept>
#include <string>

namespace detpol {

// Failure categories raised by the library and mapped to CLI exit codes.
enum class ErrCode {
  SyntaxError,
  UndeclaredVariable,
  NegativeExponent,
  RingMismatch,
  OrderingMismatch,
  LengthMismatch,
  UnknownVariable,
  ZeroDivisorRequest,
  NotZeroDimensional,
  CapExceeded,
  GenericityFail,
  GenericitySuspect,
  InvariantViolation,
  NotUnibranchSupported,
  RankDefect,
  RangeError,
  InputError,
  ResourceLimit,
};

const char* errcode_name(ErrCode c);

// Single exception type carrying the category, so call sites can map
// failures to exit codes without matching on message text.
class Error : public std::runtime_error {
public:
  Error(ErrCode code, const std::string& msg)
      : std::runtime_error(std::string(errcode_name(code)) + ": " + msg),
        code_(code) {}

  ErrCode code() const { return code_; }

private:
  ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Message without the leading category name, for wrapping with context.
inline std::string error_body(const Error& e) {
  std::string msg = e.what();
  std::string prefix = std::string(errcode_name(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  return msg;
}

inline void require(bool ok, ErrCode code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace detpol
