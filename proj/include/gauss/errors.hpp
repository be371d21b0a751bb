#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gauss {

enum class ErrorCode {
  year_zero,
  month_zero,
  day_zero,
  year_out_of_range,
  month_out_of_range,
  day_out_of_range,
  before_gregorian_cutoff,
  bad_position,
  bad_weekday_code,
  bad_century,
  bad_year_digits,
  inverted_range,
  scan_too_long,
};

std::string_view to_string(ErrorCode code);

// Base of everything this library throws. The three subclasses mirror the
// three failure families: RangeError (outside the supported calendar span),
// DomainError (argument outside a function's mathematical domain) and
// ValidationError (a malformed date).
class CalendarError : public std::runtime_error {
 public:
  CalendarError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class RangeError : public CalendarError {
 public:
  using CalendarError::CalendarError;
};

class DomainError : public CalendarError {
 public:
  using CalendarError::CalendarError;
};

class ValidationError : public CalendarError {
 public:
  using CalendarError::CalendarError;
};

}  // namespace gauss
