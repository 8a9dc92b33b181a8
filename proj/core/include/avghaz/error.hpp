#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace avghaz {

enum class ErrorCode {
  EmptyInput,
  NonPositiveTime,
  NonFiniteTime,
  BadStatus,
  NoEvents,
  OutOfDomain,
  NonPositiveTau,
  IndexOutOfRange,
  InvalidArgument,
  InvalidModel,
  ConfigInvalid,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library. `index()` carries the offending
/// record/grid/line index when one applies, `value()` the offending number.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt,
        std::optional<double> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::optional<double> value_;
};

}  // namespace avghaz
