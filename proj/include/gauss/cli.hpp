#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gauss/calendar.hpp"
#include "gauss/oracle.hpp"
#include "json.hpp"

namespace gauss::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // validation/domain error, scan mismatch
inline constexpr int kUsage = 2;    // bad arguments, unparseable input

enum class Format { text, json };

struct GlobalOptions {
  Format format = Format::text;
  bool proleptic = false;
  bool iso_weekdays = false;

  Policy policy() const { return Policy{proleptic}; }
};

// Raised for input that does not parse; maps to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct YearMonth {
  int year;
  int month;
};

// Syntax only: YYYY-MM-DD with exactly four, two and two digits. Field values
// are not range checked here, so "2023-02-30" parses and fails later as a
// validation error.
std::optional<std::array<int, 3>> parse_iso_date(std::string_view text);
std::optional<YearMonth> parse_iso_month(std::string_view text);

// Parses and validates; throws UsageError or a gauss::CalendarError.
Date read_date(std::string_view text, Policy policy);
YearMonth read_month(std::string_view text, Policy policy);

// Each command writes its result to `out` and returns the exit status.
// Calendar errors propagate as exceptions.
int cmd_dow(const GlobalOptions& opts, std::string_view date_text,
            std::ostream& out);
int cmd_dow_batch(const GlobalOptions& opts, std::istream& in,
                  std::ostream& out, std::ostream& err);
int cmd_weekdays(const GlobalOptions& opts, std::string_view day_text,
                 std::string_view month_text, std::ostream& out);
int cmd_tables(const GlobalOptions& opts, std::string_view which,
               std::ostream& out);
int cmd_cal(const GlobalOptions& opts, std::string_view month_text,
            std::ostream& out);
int cmd_verify(const GlobalOptions& opts, int from_year, int to_year,
               unsigned partitions, std::ostream& out);

// Rows of a Sunday-first month grid; empty cells are nullopt.
std::vector<std::array<std::optional<int>, 7>> month_grid(int year, int month,
                                                          Policy policy);

nlohmann::json report_to_json(const oracle::DiffReport& report);
void write_report_text(const oracle::DiffReport& report, std::ostream& out);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace gauss::cli
