#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gauss/errors.hpp"

namespace gauss {

inline constexpr int kMinYear = 1;
inline constexpr int kMaxYear = 9999;
inline constexpr int kFirstGregorianYear = 1582;
inline constexpr int kFirstGregorianMonth = 10;
inline constexpr int kFirstGregorianDay = 15;

// Least non-negative residue, also for negative operands: mod7(-9) == 5.
constexpr int mod7(std::int64_t value) {
  const auto r = static_cast<int>(value % 7);
  return r < 0 ? r + 7 : r;
}

// Codes follow the week-position table: the week runs Sunday (1) to
// Saturday (7) and each code is the position mod 7, so Saturday is 0.
enum class Weekday : int {
  saturday = 0,
  sunday = 1,
  monday = 2,
  tuesday = 3,
  wednesday = 4,
  thursday = 5,
  friday = 6,
};

constexpr int code(Weekday w) { return static_cast<int>(w); }

// Throws DomainError unless 0 <= code <= 6.
Weekday weekday_from_code(int code);

std::string_view weekday_name(Weekday w);

// Case-insensitive; accepts full names and three-letter abbreviations.
std::optional<Weekday> parse_weekday(std::string_view name);

// ISO 8601 numbering, Monday = 1 ... Sunday = 7. Output only.
int iso_weekday_number(Weekday w);

// Controls whether dates before the 1582-10-15 reform are accepted.
struct Policy {
  bool proleptic = false;
};

inline constexpr Policy kGregorian{};
inline constexpr Policy kProleptic{true};

class Date {
 public:
  // Validates and builds a date. Year 0, month 0 and day 0 each raise a
  // ValidationError with their own code; other out-of-range fields raise
  // ValidationError too, and a well-formed date before 1582-10-15 raises
  // RangeError unless the policy is proleptic.
  static Date make(int year, int month, int day, Policy policy = kGregorian);

  // Same checks, but reports failure as nullopt.
  static std::optional<Date> try_make(int year, int month, int day,
                                      Policy policy = kGregorian) noexcept;

  constexpr int year() const { return year_; }
  constexpr int month() const { return month_; }
  constexpr int day() const { return day_; }

  // YYYY-MM-DD
  std::string to_string() const;

  friend constexpr auto operator<=>(const Date&, const Date&) = default;

 private:
  constexpr Date(int year, int month, int day)
      : year_(year), month_(month), day_(day) {}

  int year_;
  int month_;
  int day_;
};

constexpr bool before_gregorian_cutoff(int year, int month, int day) {
  if (year != kFirstGregorianYear) return year < kFirstGregorianYear;
  if (month != kFirstGregorianMonth) return month < kFirstGregorianMonth;
  return day < kFirstGregorianDay;
}

// The century digits C and two-digit year Y of a four-digit year.
struct YearParts {
  int century_digits;
  int year_digits;

  friend constexpr bool operator==(const YearParts&,
                                   const YearParts&) = default;
};

bool is_leap_year(int year);

YearParts split_year(int year, Policy policy = kGregorian);

int days_in_month(int month, int year);

// Code of the weekday at 1-based position in a Sunday-first week.
int weekday_code(int position);

// Cumulative days of the preceding months of an ordinary year, mod 7. With
// leap_adjusted set, January and February are reduced by one.
int month_code(int month, bool leap_adjusted = false);

int century_code(int century_digits, Policy policy = kGregorian);

int year_code(int year_digits);

// Collapses a two-digit year into 0..27 by removing whole 28-year cycles.
int reduce_year_28(int year_digits);

// Gauss: W = (D + M + C + Y) mod 7 with ordinary month codes, less one for
// January and February of a leap year.
Weekday day_of_week(const Date& date);
Weekday day_of_week(int year, int month, int day, Policy policy = kGregorian);

// Inverse: D = [W - (M + C + Y)] mod 7, plus one before the reduction for
// January and February of a leap year. A zero residue means day 7. The
// result is the first day of the month falling on `weekday`, counted in the
// (possibly proleptic) Gregorian month even when the month straddles the
// reform.
int first_weekday_date(Weekday weekday, int month, int year,
                       Policy policy = kGregorian);

// All days of the month falling on `weekday`, ascending. Without the
// proleptic policy, days of October 1582 before the 15th are dropped.
std::vector<int> weekday_dates(Weekday weekday, int month, int year,
                               Policy policy = kGregorian);

struct CodeTables {
  // Indexed by weekday code.
  std::array<Weekday, 7> weekday_codes;
  // Indexed by month - 1.
  std::array<int, 12> month_codes_ordinary;
  std::array<int, 12> month_codes_leap;
  // Indexed by C mod 4.
  std::array<int, 4> century_codes;
  // Indexed by two-digit year.
  std::array<int, 100> year_codes;

  friend bool operator==(const CodeTables&, const CodeTables&) = default;
};

// Builds all four tables from the closed-form generators.
CodeTables generate_code_tables();

// The tables as published, entered by hand.
const CodeTables& published_code_tables();

std::string_view month_name(int month);

}  // namespace gauss
