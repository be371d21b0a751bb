#include "gauss/calendar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <string>

namespace gauss {

namespace {

constexpr std::array<int, 12> kOrdinaryMonthLengths{31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};

constexpr std::array<std::string_view, 7> kWeekdayNames{
    "Saturday", "Sunday",   "Monday", "Tuesday",
    "Wednesday", "Thursday", "Friday"};

constexpr std::array<std::string_view, 12> kMonthNames{
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

std::string num(int v) { return std::to_string(v); }

void require_year(int year) {
  if (year < kMinYear || year > kMaxYear) {
    throw RangeError(ErrorCode::year_out_of_range,
                     "year " + num(year) + " outside 1..9999");
  }
}

void require_month(int month) {
  if (month < 1 || month > 12) {
    throw DomainError(ErrorCode::month_out_of_range,
                      "month " + num(month) + " outside 1..12");
  }
}

void require_supported_year(int year, Policy policy) {
  require_year(year);
  if (!policy.proleptic && year < kFirstGregorianYear) {
    throw RangeError(ErrorCode::before_gregorian_cutoff,
                     "year " + num(year) +
                         " precedes the Gregorian calendar (from 1582-10-15)");
  }
}

// A month is usable if at least one of its days is on or after the reform.
void require_supported_month(int month, int year, Policy policy) {
  require_supported_year(year, policy);
  require_month(month);
  if (!policy.proleptic && year == kFirstGregorianYear &&
      month < kFirstGregorianMonth) {
    throw RangeError(ErrorCode::before_gregorian_cutoff,
                     "month " + num(year) + "-" + num(month) +
                         " precedes the Gregorian calendar (from 1582-10-15)");
  }
}

bool is_leap_jan_feb(int month, int year) {
  return month <= 2 && is_leap_year(year);
}

// Sum of M + C + Y, the part shared by the forward and inverse formulas.
int month_century_year_sum(int month, int year, Policy policy) {
  const YearParts parts = split_year(year, policy);
  return month_code(month) + century_code(parts.century_digits, policy) +
         year_code(parts.year_digits);
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::year_zero: return "year_zero";
    case ErrorCode::month_zero: return "month_zero";
    case ErrorCode::day_zero: return "day_zero";
    case ErrorCode::year_out_of_range: return "year_out_of_range";
    case ErrorCode::month_out_of_range: return "month_out_of_range";
    case ErrorCode::day_out_of_range: return "day_out_of_range";
    case ErrorCode::before_gregorian_cutoff: return "before_gregorian_cutoff";
    case ErrorCode::bad_position: return "bad_position";
    case ErrorCode::bad_weekday_code: return "bad_weekday_code";
    case ErrorCode::bad_century: return "bad_century";
    case ErrorCode::bad_year_digits: return "bad_year_digits";
    case ErrorCode::inverted_range: return "inverted_range";
    case ErrorCode::scan_too_long: return "scan_too_long";
  }
  return "unknown";
}

Weekday weekday_from_code(int code) {
  if (code < 0 || code > 6) {
    throw DomainError(ErrorCode::bad_weekday_code,
                      "weekday code " + num(code) + " outside 0..6");
  }
  return static_cast<Weekday>(code);
}

std::string_view weekday_name(Weekday w) {
  return kWeekdayNames[static_cast<std::size_t>(code(w))];
}

std::optional<Weekday> parse_weekday(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (int c = 0; c < 7; ++c) {
    std::string full(kWeekdayNames[static_cast<std::size_t>(c)]);
    std::transform(full.begin(), full.end(), full.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    if (lower == full || lower == full.substr(0, 3)) {
      return static_cast<Weekday>(c);
    }
  }
  return std::nullopt;
}

int iso_weekday_number(Weekday w) {
  // Saturday (0) -> 6, Sunday (1) -> 7, Monday (2) -> 1, ...
  return mod7(code(w) - 2) + 1;
}

Date Date::make(int year, int month, int day, Policy policy) {
  if (year == 0) throw ValidationError(ErrorCode::year_zero, "year is zero");
  if (month == 0) throw ValidationError(ErrorCode::month_zero, "month is zero");
  if (day == 0) throw ValidationError(ErrorCode::day_zero, "day is zero");
  if (year < kMinYear || year > kMaxYear) {
    throw ValidationError(ErrorCode::year_out_of_range,
                          "year " + num(year) + " outside 1..9999");
  }
  if (month < 1 || month > 12) {
    throw ValidationError(ErrorCode::month_out_of_range,
                          "month " + num(month) + " outside 1..12");
  }
  if (day < 1 || day > days_in_month(month, year)) {
    throw ValidationError(ErrorCode::day_out_of_range,
                          "day " + num(day) + " outside 1.." +
                              num(days_in_month(month, year)) + " for " +
                              num(year) + "-" + num(month));
  }
  if (!policy.proleptic && before_gregorian_cutoff(year, month, day)) {
    throw RangeError(ErrorCode::before_gregorian_cutoff,
                     Date(year, month, day).to_string() +
                         " precedes the Gregorian calendar (from 1582-10-15)");
  }
  return Date(year, month, day);
}

std::optional<Date> Date::try_make(int year, int month, int day,
                                   Policy policy) noexcept {
  try {
    return make(year, month, day, policy);
  } catch (const CalendarError&) {
    return std::nullopt;
  }
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year_, month_, day_);
  return buf;
}

bool is_leap_year(int year) {
  require_year(year);
  return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

YearParts split_year(int year, Policy policy) {
  require_supported_year(year, policy);
  return {year / 100, year % 100};
}

int days_in_month(int month, int year) {
  require_month(month);
  require_year(year);
  if (month == 2 && is_leap_year(year)) return 29;
  return kOrdinaryMonthLengths[static_cast<std::size_t>(month - 1)];
}

int weekday_code(int position) {
  if (position < 1 || position > 7) {
    throw DomainError(ErrorCode::bad_position,
                      "week position " + num(position) + " outside 1..7");
  }
  return position % 7;
}

int month_code(int month, bool leap_adjusted) {
  require_month(month);
  int preceding = 0;
  for (int m = 1; m < month; ++m) {
    preceding += kOrdinaryMonthLengths[static_cast<std::size_t>(m - 1)];
  }
  return mod7(preceding - (leap_adjusted && month <= 2 ? 1 : 0));
}

int century_code(int century_digits, Policy policy) {
  const int floor = policy.proleptic ? 0 : kFirstGregorianYear / 100;
  if (century_digits < floor) {
    throw RangeError(ErrorCode::bad_century,
                     "century digits " + num(century_digits) + " below " +
                         num(floor));
  }
  return mod7(2 * (3 - century_digits % 4) + 1);
}

int year_code(int year_digits) {
  if (year_digits < 0 || year_digits > 99) {
    throw DomainError(ErrorCode::bad_year_digits,
                      "two-digit year " + num(year_digits) + " outside 0..99");
  }
  return mod7(year_digits + year_digits / 4);
}

int reduce_year_28(int year_digits) {
  if (year_digits < 0 || year_digits > 99) {
    throw DomainError(ErrorCode::bad_year_digits,
                      "two-digit year " + num(year_digits) + " outside 0..99");
  }
  int reduced = year_digits;
  while (reduced >= 28) reduced -= 28;
  return reduced;
}

Weekday day_of_week(const Date& date) {
  const Policy any{true};  // the Date itself already passed validation
  const int sum =
      date.day() + month_century_year_sum(date.month(), date.year(), any);
  return static_cast<Weekday>(
      mod7(sum - (is_leap_jan_feb(date.month(), date.year()) ? 1 : 0)));
}

Weekday day_of_week(int year, int month, int day, Policy policy) {
  return day_of_week(Date::make(year, month, day, policy));
}

int first_weekday_date(Weekday weekday, int month, int year, Policy policy) {
  const int w = code(weekday_from_code(code(weekday)));
  require_supported_month(month, year, policy);
  const int residue =
      mod7(w - month_century_year_sum(month, year, kProleptic) +
           (is_leap_jan_feb(month, year) ? 1 : 0));
  return residue == 0 ? 7 : residue;
}

std::vector<int> weekday_dates(Weekday weekday, int month, int year,
                               Policy policy) {
  const int last = days_in_month(month, year);
  std::vector<int> dates;
  for (int d = first_weekday_date(weekday, month, year, policy); d <= last;
       d += 7) {
    if (!policy.proleptic && before_gregorian_cutoff(year, month, d)) continue;
    dates.push_back(d);
  }
  return dates;
}

CodeTables generate_code_tables() {
  CodeTables t{};
  for (int position = 1; position <= 7; ++position) {
    const int c = weekday_code(position);
    // position 1 is Sunday, so the weekday at `position` has code position % 7
    t.weekday_codes[static_cast<std::size_t>(c)] = static_cast<Weekday>(c);
  }
  for (int m = 1; m <= 12; ++m) {
    t.month_codes_ordinary[static_cast<std::size_t>(m - 1)] = month_code(m);
    t.month_codes_leap[static_cast<std::size_t>(m - 1)] = month_code(m, true);
  }
  // C = 16, 17, 18, 19 covers residues 0..3 within the supported range.
  for (int c = 16; c < 20; ++c) {
    t.century_codes[static_cast<std::size_t>(c % 4)] = century_code(c);
  }
  for (int y = 0; y < 100; ++y) {
    t.year_codes[static_cast<std::size_t>(y)] = year_code(y);
  }
  return t;
}

const CodeTables& published_code_tables() {
  using W = Weekday;
  static const CodeTables tables{
      {W::saturday, W::sunday, W::monday, W::tuesday, W::wednesday,
       W::thursday, W::friday},
      //  Jan Feb Mar Apr May Jun Jul Aug Sep Oct Nov Dec
      {0, 3, 3, 6, 1, 4, 6, 2, 5, 0, 3, 5},
      {6, 2, 3, 6, 1, 4, 6, 2, 5, 0, 3, 5},
      // C mod 4 = 0 (16, 20, ...), 1 (17, 21, ...), 2 (18, 22, ...),
      // 3 (15, 19, ...)
      {0, 5, 3, 1},
      {0, 1, 2, 3, 5, 6, 0, 1, 3, 4,   // 00-09
       5, 6, 1, 2, 3, 4, 6, 0, 1, 2,   // 10-19
       4, 5, 6, 0, 2, 3, 4, 5, 0, 1,   // 20-29
       2, 3, 5, 6, 0, 1, 3, 4, 5, 6,   // 30-39
       1, 2, 3, 4, 6, 0, 1, 2, 4, 5,   // 40-49
       6, 0, 2, 3, 4, 5, 0, 1, 2, 3,   // 50-59
       5, 6, 0, 1, 3, 4, 5, 6, 1, 2,   // 60-69
       3, 4, 6, 0, 1, 2, 4, 5, 6, 0,   // 70-79
       2, 3, 4, 5, 0, 1, 2, 3, 5, 6,   // 80-89
       0, 1, 3, 4, 5, 6, 1, 2, 3, 4},  // 90-99
  };
  return tables;
}

std::string_view month_name(int month) {
  require_month(month);
  return kMonthNames[static_cast<std::size_t>(month - 1)];
}

}  // namespace gauss
