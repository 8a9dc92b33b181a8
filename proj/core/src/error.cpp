#include "avghaz/error.hpp"

namespace avghaz {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveTime: return "NonPositiveTime";
    case ErrorCode::NonFiniteTime: return "NonFiniteTime";
    case ErrorCode::BadStatus: return "BadStatus";
    case ErrorCode::NoEvents: return "NoEvents";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonPositiveTau: return "NonPositiveTau";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index, std::optional<double> value)
    : std::runtime_error(message), code_(code), index_(index), value_(value) {}

}  // namespace avghaz
