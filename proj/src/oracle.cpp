#include "gauss/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <thread>

namespace gauss::oracle {

namespace {

constexpr std::array<int, 12> kMonthLengths{31, 28, 31, 30, 31, 30,
                                            31, 31, 30, 31, 30, 31};

int month_length(int year, int month) {
  const int base = kMonthLengths[static_cast<std::size_t>(month - 1)];
  return month == 2 && is_leap_year(year) ? base + 1 : base;
}

// Days in years 1..year-1.
std::int64_t days_before_year(std::int64_t year) {
  const std::int64_t y = year - 1;
  return 365 * y + y / 4 - y / 100 + y / 400;
}

int day_of_year(int year, int month, int day) {
  int n = day;
  for (int m = 1; m < month; ++m) n += month_length(year, m);
  return n;
}

std::int64_t absolute_day(int year, int month, int day) {
  return days_before_year(year) + day_of_year(year, month, day);
}

std::int64_t anchor() {
  static const std::int64_t value = absolute_day(
      kFirstGregorianYear, kFirstGregorianMonth, kFirstGregorianDay);
  return value;
}

std::int64_t span_of(const Date& start, const Date& end) {
  return day_number(end).value - day_number(start).value + 1;
}

void scan_chunk(std::int64_t first, std::int64_t count,
                const WeekdayFunction& candidate,
                std::vector<Mismatch>& out) {
  Date date = from_day_number(DayNumber{first}, kProleptic);
  for (std::int64_t i = 0; i < count; ++i) {
    const Weekday expected = oracle_day_of_week(date);
    const Weekday got = candidate(date);
    if (got != expected) out.push_back({date, got, expected});
    if (i + 1 < count) date = next_day(date);
  }
}

}  // namespace

DayNumber day_number(const Date& date) {
  return {absolute_day(date.year(), date.month(), date.day()) - anchor()};
}

Date from_day_number(DayNumber n, Policy policy) {
  const std::int64_t absolute = n.value + anchor();
  if (absolute < 1 || absolute > days_before_year(kMaxYear + 1)) {
    throw RangeError(ErrorCode::year_out_of_range,
                     "day number " + std::to_string(n.value) +
                         " outside years 1..9999");
  }
  // 146097 days per 400 years; the estimate is off by at most one.
  std::int64_t year = std::clamp<std::int64_t>(
      (absolute - 1) * 400 / 146097 + 1, kMinYear, kMaxYear);
  while (days_before_year(year) >= absolute) --year;
  while (days_before_year(year + 1) < absolute) ++year;

  int remaining = static_cast<int>(absolute - days_before_year(year));
  const int y = static_cast<int>(year);
  int month = 1;
  while (remaining > month_length(y, month)) {
    remaining -= month_length(y, month);
    ++month;
  }
  return Date::make(y, month, remaining, policy);
}

Date next_day(const Date& date) {
  int y = date.year();
  int m = date.month();
  int d = date.day() + 1;
  if (d > month_length(y, m)) {
    d = 1;
    if (++m > 12) {
      m = 1;
      ++y;
    }
  }
  if (y > kMaxYear) {
    throw RangeError(ErrorCode::year_out_of_range, "no day after 9999-12-31");
  }
  return Date::make(y, m, d, kProleptic);
}

Weekday oracle_day_of_week(const Date& date) {
  return static_cast<Weekday>(
      mod7(code(kAnchorWeekday) + day_number(date).value));
}

DiffReport differential_scan(const Date& start, const Date& end,
                             const WeekdayFunction& candidate,
                             const ScanOptions& options) {
  if (end < start) {
    throw RangeError(ErrorCode::inverted_range,
                     "scan range " + start.to_string() + ".." +
                         end.to_string() + " is inverted");
  }
  const std::int64_t total = span_of(start, end);
  if (total > options.max_days) {
    throw RangeError(ErrorCode::scan_too_long,
                     "scan of " + std::to_string(total) +
                         " days exceeds the limit of " +
                         std::to_string(options.max_days));
  }

  unsigned parts = options.partitions;
  if (parts == 0) parts = std::max(1u, std::thread::hardware_concurrency());
  parts = static_cast<unsigned>(
      std::min<std::int64_t>(static_cast<std::int64_t>(parts), total));

  const std::int64_t first = day_number(start).value;
  const std::int64_t per = total / parts;
  const std::int64_t extra = total % parts;

  std::vector<std::vector<Mismatch>> found(parts);
  {
    std::vector<std::jthread> workers;
    std::int64_t offset = first;
    for (unsigned p = 0; p < parts; ++p) {
      const std::int64_t count = per + (p < extra ? 1 : 0);
      if (parts == 1) {
        scan_chunk(offset, count, candidate, found[p]);
      } else {
        workers.emplace_back(scan_chunk, offset, count, std::cref(candidate),
                             std::ref(found[p]));
      }
      offset += count;
    }
  }

  DiffReport report{start, end, total, {}};
  for (auto& chunk : found) {
    report.mismatches.insert(report.mismatches.end(), chunk.begin(),
                             chunk.end());
  }
  return report;
}

DiffReport differential_scan(const Date& start, const Date& end,
                             const ScanOptions& options) {
  return differential_scan(
      start, end, [](const Date& d) { return gauss::day_of_week(d); }, options);
}

}  // namespace gauss::oracle
