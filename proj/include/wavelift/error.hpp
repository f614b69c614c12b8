#ifndef WAVELIFT_ERROR_HPP
#define WAVELIFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wavelift {

enum class ErrorCode {
  InvalidArgument,
  ZeroMass,
  NotDivisible,
  TooShort,
  NotPerfectReconstruction,
  BadParity,
  UnknownOrder,
  NoConvergence,
  Unsupported,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroMass: return "ZeroMass";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotPerfectReconstruction: return "NotPerfectReconstruction";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::UnknownOrder: return "UnknownOrder";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wavelift

#endif  // WAVELIFT_ERROR_HPP
