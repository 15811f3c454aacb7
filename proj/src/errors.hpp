#pragma once

#include <stdexcept>
#include <string>

namespace hyppow {

// Stable error taxonomy; the C API maps these 1:1 onto status codes.
enum class ErrorCode {
  InvalidArgument = 1,
  ParameterGuard = 2,   // c (or a lower pFq parameter) is zero or a negative integer
  ZeroDenominator = 3,  // a recurrence coefficient denominator vanished
  Domain = 4,           // argument outside the series' disk of convergence
  Pole = 5,             // Gamma evaluated at a nonpositive integer
  Overflow = 6,
  LengthMismatch = 7,
  UnknownFamily = 8,
  MissingParameter = 9,
  VerifyFail = 10,
  CrossCheckFail = 11,  // benchmark outputs disagreed; timings withheld
  SeriesCap = 12,       // exact-rational sequence length cap exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace hyppow
