#ifndef FFTP_ERROR_HPP
#define FFTP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fftp {

enum class ErrorCode {
  UnknownLetter,
  ConfigError,
  OutOfBall,
  BudgetExceeded,
  AlreadyGeodesic,
  NotGeodesic,
  NotALoop,
  WitnessNotFound,
  ScaleMismatch,
  ProvisoViolated,
  NegativeBase2,
  ProfileNotMonotone,
  ProfileDomainExceeded,
  PreconditionFailed,
};

const char* error_code_name(ErrorCode c);

// Single exception type for all engine failures. `code` is the stable,
// machine-checkable part; `what()` carries the human-readable detail
// (the failing time step, the offending word, and so on).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fftp

#endif
