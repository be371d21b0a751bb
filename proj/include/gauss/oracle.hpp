#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gauss/calendar.hpp"

// Ground truth for the weekday formulas: count days linearly from the first
// Gregorian day and reduce mod 7. Nothing here touches the month, century or
// year codes; only the leap-year rule is shared with the formula side.
namespace gauss::oracle {

// 1582-10-15, the first day of the Gregorian calendar, was a Friday.
inline constexpr Weekday kAnchorWeekday = Weekday::friday;

// Days elapsed since 1582-10-15. Negative only for proleptic dates.
struct DayNumber {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(const DayNumber&,
                                    const DayNumber&) = default;
};

DayNumber day_number(const Date& date);

// Inverse of day_number. Throws RangeError if the result would fall outside
// years 1..9999 or before the reform under the Gregorian policy.
Date from_day_number(DayNumber n, Policy policy = kGregorian);

// The following calendar day. Throws RangeError past 9999-12-31.
Date next_day(const Date& date);

Weekday oracle_day_of_week(const Date& date);

struct Mismatch {
  Date date;
  Weekday formula;
  Weekday oracle;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct DiffReport {
  Date start_date;
  Date end_date;
  std::int64_t days_checked = 0;
  std::vector<Mismatch> mismatches;  // ascending by date

  bool clean() const { return mismatches.empty(); }
};

struct ScanOptions {
  std::int64_t max_days = 10'000'000;
  // Number of contiguous sub-ranges scanned concurrently; 0 means one per
  // hardware thread.
  unsigned partitions = 1;
};

using WeekdayFunction = std::function<Weekday(const Date&)>;

// Compares `candidate` against the oracle on every day of [start, end].
// Throws RangeError when start > end or the span exceeds options.max_days.
DiffReport differential_scan(const Date& start, const Date& end,
                             const WeekdayFunction& candidate,
                             const ScanOptions& options = {});

// Scan of the Gauss formula (gauss::day_of_week) itself.
DiffReport differential_scan(const Date& start, const Date& end,
                             const ScanOptions& options = {});

}  // namespace gauss::oracle
