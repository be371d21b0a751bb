#include "gauss/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace gauss::cli {

using nlohmann::json;

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

int to_int(std::string_view digits) {
  int value = 0;
  std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

json weekday_json(const GlobalOptions& opts, Weekday w) {
  json j{{"weekday", weekday_name(w)}, {"code", code(w)}};
  if (opts.iso_weekdays) j["iso"] = iso_weekday_number(w);
  return j;
}

std::string weekday_text(const GlobalOptions& opts, Weekday w) {
  std::string s =
      std::string(weekday_name(w)) + " (" + std::to_string(code(w)) + ")";
  if (opts.iso_weekdays) s += " iso=" + std::to_string(iso_weekday_number(w));
  return s;
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

// Sunday-first column of a weekday: Sunday (1) -> 0 ... Saturday (0) -> 6.
int column_of(Weekday w) { return mod7(code(w) - 1); }

constexpr std::array<std::string_view, 7> kColumnHeads{"Su", "Mo", "Tu", "We",
                                                       "Th", "Fr", "Sa"};

struct TableSection {
  std::string key;
  std::string title;
  std::string formula;
};

void section_head(const TableSection& s, std::ostream& out) {
  out << "[" << s.key << "] " << s.title << "\n"
      << "formula: " << s.formula << "\n";
}

void section_tail(const TableSection& s, json entries, bool check, json& doc,
                  std::ostream* out) {
  if (out) *out << "matches_published: " << (check ? "yes" : "no") << "\n";
  doc[s.key] = {{"title", s.title},
                {"formula", s.formula},
                {"entries", std::move(entries)},
                {"matches_published", check}};
}

void table_w(const CodeTables& t, bool check, json& doc, std::ostream* out) {
  const TableSection s{"w", "Codes for days of the week",
                       "Code(W) = P mod 7, P = position in a Sunday-first week"};
  json entries = json::array();
  for (int c = 0; c < 7; ++c) {
    const Weekday w = t.weekday_codes[static_cast<std::size_t>(c)];
    entries.push_back({{"day", weekday_name(w)}, {"code", c}});
  }
  if (out) {
    section_head(s, *out);
    for (const auto& e : entries) {
      *out << std::left << std::setw(10) << e["day"].get<std::string>()
           << e["code"].get<int>() << "\n";
    }
  }
  section_tail(s, std::move(entries), check, doc, out);
}

void table_m(const CodeTables& t, bool check, json& doc, std::ostream* out) {
  const TableSection s{
      "m", "Codes for months",
      "Code(M) = T mod 7, T = days in the preceding months of an ordinary "
      "year; leap years reduce January and February by 1"};
  json entries = json::array();
  for (int m = 1; m <= 12; ++m) {
    const auto i = static_cast<std::size_t>(m - 1);
    entries.push_back({{"month", month_name(m)},
                       {"ordinary", t.month_codes_ordinary[i]},
                       {"leap", t.month_codes_leap[i]}});
  }
  if (out) {
    section_head(s, *out);
    *out << std::left << std::setw(11) << "month" << std::setw(9)
         << "ordinary"
         << "leap\n";
    for (const auto& e : entries) {
      *out << std::left << std::setw(11) << e["month"].get<std::string>()
           << std::setw(9) << e["ordinary"].get<int>() << e["leap"].get<int>()
           << "\n";
    }
  }
  section_tail(s, std::move(entries), check, doc, out);
}

void table_c(const CodeTables& t, bool check, json& doc, std::ostream* out) {
  const TableSection s{"c", "Codes for the century digits C",
                       "Code(C) = [2(3 - C mod 4) + 1] mod 7"};
  json entries = json::array();
  // Same row order as the printed table: 15, 16, 17, 18.
  for (int first = 15; first <= 18; ++first) {
    const int residue = first % 4;
    json centuries = json::array();
    for (int c = first; c <= 99; c += 4) centuries.push_back(c);
    entries.push_back({{"residue", residue},
                       {"centuries", centuries},
                       {"code", t.century_codes[static_cast<std::size_t>(
                                    residue)]}});
  }
  if (out) {
    section_head(s, *out);
    for (const auto& e : entries) {
      const auto& cs = e["centuries"];
      *out << "C mod 4 = " << e["residue"].get<int>() << " (";
      for (std::size_t i = 0; i < 4; ++i) {
        *out << cs[i].get<int>() << ", ";
      }
      *out << "...) " << e["code"].get<int>() << "\n";
    }
  }
  section_tail(s, std::move(entries), check, doc, out);
}

void table_y(const CodeTables& t, bool check, json& doc, std::ostream* out) {
  const TableSection s{"y", "Codes for the two-digit year Y",
                       "Code(Y) = (Y + floor(Y/4)) mod 7"};
  json entries = json::array();
  for (int y = 0; y < 100; ++y) {
    entries.push_back(
        {{"year", y}, {"code", t.year_codes[static_cast<std::size_t>(y)]}});
  }
  if (out) {
    section_head(s, *out);
    for (const auto& e : entries) {
      *out << std::right << std::setfill('0') << std::setw(2)
           << e["year"].get<int>() << std::setfill(' ') << " "
           << e["code"].get<int>() << "\n";
    }
  }
  section_tail(s, std::move(entries), check, doc, out);
}

}  // namespace

std::optional<std::array<int, 3>> parse_iso_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  const auto y = text.substr(0, 4), m = text.substr(5, 2), d = text.substr(8, 2);
  if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return std::nullopt;
  return std::array<int, 3>{to_int(y), to_int(m), to_int(d)};
}

std::optional<YearMonth> parse_iso_month(std::string_view text) {
  if (text.size() != 7 || text[4] != '-') return std::nullopt;
  const auto y = text.substr(0, 4), m = text.substr(5, 2);
  if (!all_digits(y) || !all_digits(m)) return std::nullopt;
  return YearMonth{to_int(y), to_int(m)};
}

Date read_date(std::string_view text, Policy policy) {
  const auto fields = parse_iso_date(text);
  if (!fields) {
    throw UsageError("cannot parse '" + std::string(text) +
                     "' as an ISO 8601 date (YYYY-MM-DD)");
  }
  return Date::make((*fields)[0], (*fields)[1], (*fields)[2], policy);
}

YearMonth read_month(std::string_view text, Policy policy) {
  const auto ym = parse_iso_month(text);
  if (!ym) {
    throw UsageError("cannot parse '" + std::string(text) +
                     "' as an ISO 8601 month (YYYY-MM)");
  }
  if (ym->year == 0) throw ValidationError(ErrorCode::year_zero, "year is zero");
  if (ym->month == 0) {
    throw ValidationError(ErrorCode::month_zero, "month is zero");
  }
  if (ym->month > 12) {
    throw ValidationError(ErrorCode::month_out_of_range,
                          "month " + std::to_string(ym->month) +
                              " outside 1..12");
  }
  // The last day of the month must be usable under the policy.
  Date::make(ym->year, ym->month, days_in_month(ym->month, ym->year), policy);
  return *ym;
}

int cmd_dow(const GlobalOptions& opts, std::string_view date_text,
            std::ostream& out) {
  const Weekday w = day_of_week(read_date(date_text, opts.policy()));
  if (opts.format == Format::json) {
    emit(weekday_json(opts, w), out);
  } else {
    out << weekday_text(opts, w) << "\n";
  }
  return kOk;
}

int cmd_dow_batch(const GlobalOptions& opts, std::istream& in,
                  std::ostream& out, std::ostream& err) {
  int status = kOk;
  json results = json::array();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    std::string message;
    int line_status = kOk;
    try {
      const Weekday w = day_of_week(read_date(text, opts.policy()));
      if (opts.format == Format::json) {
        json r = weekday_json(opts, w);
        r["input"] = text;
        results.push_back(std::move(r));
      } else {
        out << weekday_text(opts, w) << "\n";
      }
      continue;
    } catch (const UsageError& e) {
      message = e.what();
      line_status = kUsage;
    } catch (const CalendarError& e) {
      message = e.what();
      line_status = kFailure;
    }
    status = std::max(status, line_status);
    err << "line " << line_no << ": " << message << "\n";
    if (opts.format == Format::json) {
      results.push_back({{"input", text}, {"error", message}});
    } else {
      out << "error: " << message << "\n";
    }
  }
  if (opts.format == Format::json) emit({{"results", results}}, out);
  return status;
}

int cmd_weekdays(const GlobalOptions& opts, std::string_view day_text,
                 std::string_view month_text, std::ostream& out) {
  const auto w = parse_weekday(day_text);
  if (!w) {
    throw UsageError("unknown weekday '" + std::string(day_text) + "'");
  }
  const YearMonth ym = read_month(month_text, opts.policy());
  const auto dates = weekday_dates(*w, ym.month, ym.year, opts.policy());
  if (opts.format == Format::json) {
    emit({{"dates", dates}}, out);
  } else {
    for (std::size_t i = 0; i < dates.size(); ++i) {
      out << (i ? " " : "") << dates[i];
    }
    out << "\n";
  }
  return kOk;
}

int cmd_tables(const GlobalOptions& opts, std::string_view which,
               std::ostream& out) {
  const bool all = which == "all";
  if (!all && which != "w" && which != "m" && which != "c" && which != "y") {
    throw UsageError("unknown table '" + std::string(which) +
                     "' (expected w, m, c, y or all)");
  }
  const CodeTables t = generate_code_tables();
  const CodeTables& pub = published_code_tables();
  std::ostream* text = opts.format == Format::text ? &out : nullptr;
  json doc = json::object();
  bool first = true;
  auto section = [&](std::string_view key, auto&& fn, bool check) {
    if (!all && which != key) return;
    if (text && !first) *text << "\n";
    first = false;
    fn(t, check, doc, text);
  };
  section("w", table_w, t.weekday_codes == pub.weekday_codes);
  section("m", table_m,
          t.month_codes_ordinary == pub.month_codes_ordinary &&
              t.month_codes_leap == pub.month_codes_leap);
  section("c", table_c, t.century_codes == pub.century_codes);
  section("y", table_y, t.year_codes == pub.year_codes);
  if (!text) emit(doc, out);
  return kOk;
}

std::vector<std::array<std::optional<int>, 7>> month_grid(int year, int month,
                                                          Policy policy) {
  std::vector<std::array<std::optional<int>, 7>> rows;
  for (int d = 1; d <= days_in_month(month, year); ++d) {
    if (!policy.proleptic && before_gregorian_cutoff(year, month, d)) continue;
    const int col = column_of(day_of_week(Date::make(year, month, d, policy)));
    if (rows.empty() || col == 0) rows.emplace_back();
    rows.back()[static_cast<std::size_t>(col)] = d;
  }
  return rows;
}

int cmd_cal(const GlobalOptions& opts, std::string_view month_text,
            std::ostream& out) {
  const YearMonth ym = read_month(month_text, opts.policy());
  const auto rows = month_grid(ym.year, ym.month, opts.policy());
  const std::string title =
      std::string(month_name(ym.month)) + " " + std::to_string(ym.year);
  if (opts.format == Format::json) {
    json weeks = json::array();
    for (const auto& row : rows) {
      json r = json::array();
      for (const auto& cell : row) {
        r.push_back(cell ? json(*cell) : json(nullptr));
      }
      weeks.push_back(std::move(r));
    }
    json columns = json::array();
    for (int c = 0; c < 7; ++c) {
      columns.push_back(weekday_name(static_cast<Weekday>(mod7(c + 1))));
    }
    emit({{"title", title}, {"columns", columns}, {"weeks", weeks}}, out);
    return kOk;
  }
  out << title << "\n";
  for (std::size_t c = 0; c < 7; ++c) out << (c ? " " : "") << kColumnHeads[c];
  out << "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 7; ++c) {
      if (c) line += ' ';
      if (row[c]) {
        line += (*row[c] < 10 ? " " : "") + std::to_string(*row[c]);
      } else {
        line += "  ";
      }
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  return kOk;
}

nlohmann::json report_to_json(const oracle::DiffReport& report) {
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"date", m.date.to_string()},
                          {"formula", weekday_name(m.formula)},
                          {"formula_code", code(m.formula)},
                          {"oracle", weekday_name(m.oracle)},
                          {"oracle_code", code(m.oracle)}});
  }
  return {{"start", report.start_date.to_string()},
          {"end", report.end_date.to_string()},
          {"days_checked", report.days_checked},
          {"mismatch_count", report.mismatches.size()},
          {"mismatches", mismatches}};
}

void write_report_text(const oracle::DiffReport& report, std::ostream& out) {
  out << "start=" << report.start_date.to_string()
      << " end=" << report.end_date.to_string()
      << " days_checked=" << report.days_checked
      << " mismatch_count=" << report.mismatches.size() << "\n";
  for (const auto& m : report.mismatches) {
    out << "mismatch date=" << m.date.to_string()
        << " formula=" << weekday_name(m.formula) << "(" << code(m.formula)
        << ") oracle=" << weekday_name(m.oracle) << "(" << code(m.oracle)
        << ")\n";
  }
}

int cmd_verify(const GlobalOptions& opts, int from_year, int to_year,
               unsigned partitions, std::ostream& out) {
  const int floor = opts.proleptic ? kMinYear : kFirstGregorianYear;
  if (from_year < floor || to_year > kMaxYear || from_year > to_year) {
    throw UsageError("verify needs " + std::to_string(floor) +
                     " <= from <= to <= 9999, got " +
                     std::to_string(from_year) + ".." +
                     std::to_string(to_year));
  }
  Date start = Date::make(from_year, 1, 1, kProleptic);
  const Date cutoff = Date::make(kFirstGregorianYear, kFirstGregorianMonth,
                                 kFirstGregorianDay);
  if (!opts.proleptic) start = std::max(start, cutoff);
  const Date end = Date::make(to_year, 12, 31, kProleptic);

  oracle::ScanOptions scan;
  scan.partitions = partitions;
  const auto report = oracle::differential_scan(start, end, scan);
  if (opts.format == Format::json) {
    emit(report_to_json(report), out);
  } else {
    write_report_text(report, out);
  }
  return report.clean() ? kOk : kFailure;
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Gregorian day-of-week calculator using Gauss's formula",
               "gausscal"};
  app.require_subcommand(1);

  GlobalOptions opts;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--proleptic", opts.proleptic,
               "Accept Gregorian dates before 1582-10-15");
  app.add_flag("--iso-weekdays", opts.iso_weekdays,
               "Also print ISO weekday numbers (Mon=1..Sun=7)");

  std::string date_text;
  bool from_stdin = false;
  auto* dow = app.add_subcommand("dow", "Day of the week of a date");
  dow->add_option("date", date_text, "Date as YYYY-MM-DD");
  dow->add_flag("--stdin", from_stdin, "Read one date per line from stdin");
  dow->fallthrough();

  std::string weekday_arg, month_arg;
  auto* weekdays =
      app.add_subcommand("weekdays", "All dates of a weekday in a month");
  weekdays->add_option("day", weekday_arg, "Weekday name")->required();
  weekdays->add_option("month", month_arg, "Month as YYYY-MM")->required();
  weekdays->fallthrough();

  std::string which = "all";
  auto* tables = app.add_subcommand("tables", "Print the code tables");
  tables->add_option("which", which, "w, m, c, y or all")
      ->capture_default_str();
  tables->fallthrough();

  std::string cal_month;
  auto* cal = app.add_subcommand("cal", "Month grid, Sunday first");
  cal->add_option("month", cal_month, "Month as YYYY-MM")->required();
  cal->fallthrough();

  int from_year = 0, to_year = 0;
  unsigned partitions = 0;
  auto* verify = app.add_subcommand(
      "verify", "Compare the formula with the day-count oracle");
  verify->add_option("--from", from_year, "First year")->required();
  verify->add_option("--to", to_year, "Last year")->required();
  verify->add_option("--threads", partitions,
                     "Concurrent sub-ranges (0 = hardware threads)")
      ->capture_default_str();
  verify->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (dow->parsed() && from_stdin == !date_text.empty()) {
      throw CLI::ValidationError("dow", "give either a DATE or --stdin");
    }
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gausscal: " << e.what() << "\n";
    return kUsage;
  }
  opts.format = format == "json" ? Format::json : Format::text;

  try {
    if (dow->parsed()) {
      return from_stdin ? cmd_dow_batch(opts, in, out, err)
                        : cmd_dow(opts, date_text, out);
    }
    if (weekdays->parsed()) {
      return cmd_weekdays(opts, weekday_arg, month_arg, out);
    }
    if (tables->parsed()) return cmd_tables(opts, which, out);
    if (cal->parsed()) return cmd_cal(opts, cal_month, out);
    if (verify->parsed()) {
      return cmd_verify(opts, from_year, to_year, partitions, out);
    }
  } catch (const UsageError& e) {
    err << "gausscal: " << e.what() << "\n";
    return kUsage;
  } catch (const CalendarError& e) {
    err << "gausscal: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace gauss::cli
