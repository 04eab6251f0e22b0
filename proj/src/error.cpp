#include "fftp/error.hpp"

namespace fftp {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::OutOfBall: return "OutOfBall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::AlreadyGeodesic: return "AlreadyGeodesic";
    case ErrorCode::NotGeodesic: return "NotGeodesic";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::ProvisoViolated: return "ProvisoViolated";
    case ErrorCode::NegativeBase2: return "NegativeBase2";
    case ErrorCode::ProfileNotMonotone: return "ProfileNotMonotone";
    case ErrorCode::ProfileDomainExceeded: return "ProfileDomainExceeded";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "UnknownError";
}

}  // namespace fftp
