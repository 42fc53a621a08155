#include "fractalis/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <variant>

#include "fractalis/error.hpp"

namespace fractalis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// RFC-4180 style split: double quotes group commas, "" escapes a quote.
std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.emplace_back(trim(cur));
  return fields;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ColumnIndex {
  std::size_t date, open, close;
  std::optional<std::size_t> high, low, adj_close, volume;
};

std::optional<std::size_t> find_column(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

ColumnIndex locate_columns(const std::vector<std::string>& header, const CsvSchema& schema) {
  auto required = [&](const std::string& name) {
    auto idx = find_column(header, name);
    if (!idx) throw Error(ErrorCode::MalformedHeader, "required column '" + name + "' not found in header");
    return *idx;
  };
  ColumnIndex ci{required(schema.date), required(schema.open), required(schema.close), {}, {}, {}, {}};
  ci.high = find_column(header, schema.high);
  ci.low = find_column(header, schema.low);
  ci.adj_close = find_column(header, schema.adj_close);
  ci.volume = find_column(header, schema.volume);
  if (ci.high.has_value() != ci.low.has_value())
    throw Error(ErrorCode::MalformedHeader, "high and low columns must appear together");
  return ci;
}

// Returns the row or a rejection reason.
std::variant<OhlcRow, std::string> parse_row(const std::vector<std::string>& fields, const ColumnIndex& ci,
                                             std::size_t width, const CsvSchema& schema) {
  if (fields.size() != width)
    return "expected " + std::to_string(width) + " fields, found " + std::to_string(fields.size());
  OhlcRow row;
  const auto date = parse_date(fields[ci.date], schema.alternate_date_format);
  if (!date) return "unparseable date '" + fields[ci.date] + "'";
  row.date = *date;

  auto price = [&](std::size_t idx, const std::string& role, double& out) -> std::optional<std::string> {
    const auto v = parse_number(fields[idx]);
    if (!v) return "unparseable " + role + " '" + fields[idx] + "'";
    if (*v <= 0.0) return "non-positive " + role + " " + fields[idx];
    out = *v;
    return std::nullopt;
  };
  double tmp = 0.0;
  if (auto err = price(ci.open, "open", row.open)) return *err;
  if (auto err = price(ci.close, "close", row.close)) return *err;
  if (ci.high) {
    if (auto err = price(*ci.high, "high", tmp)) return *err;
    row.high = tmp;
    if (auto err = price(*ci.low, "low", tmp)) return *err;
    row.low = tmp;
  }
  if (ci.adj_close) {
    if (auto err = price(*ci.adj_close, "adjusted close", tmp)) return *err;
    row.adj_close = tmp;
  }
  if (ci.volume) {
    const auto v = parse_number(fields[*ci.volume]);
    if (!v || *v < 0.0) return "bad volume '" + fields[*ci.volume] + "'";
    row.volume = *v;
  }
  if (row.high && (*row.low > std::min(row.open, row.close) || *row.high < std::max(row.open, row.close)))
    return "high/low range does not contain open and close";
  return row;
}

}  // namespace

std::optional<Date> parse_date(std::string_view text, const std::optional<std::string>& alternate) {
  text = trim(text);
  using namespace std::chrono;
  if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
    int y = 0;
    unsigned m = 0, d = 0;
    const char* b = text.data();
    const bool ok = std::from_chars(b, b + 4, y).ptr == b + 4 && std::from_chars(b + 5, b + 7, m).ptr == b + 7 &&
                    std::from_chars(b + 8, b + 10, d).ptr == b + 10;
    if (ok) {
      const year_month_day ymd{year{y}, month{m}, day{d}};
      if (ymd.ok()) return sys_days{ymd};
    }
  }
  if (alternate) {
    std::tm tm{};
    std::istringstream is{std::string(text)};
    is >> std::get_time(&tm, alternate->c_str());
    if (!is.fail() && is.peek() == std::char_traits<char>::eof()) {
      const year_month_day ymd{year{tm.tm_year + 1900}, month{static_cast<unsigned>(tm.tm_mon + 1)},
                               day{static_cast<unsigned>(tm.tm_mday)}};
      if (ymd.ok()) return sys_days{ymd};
    }
  }
  return std::nullopt;
}

OhlcTable::OhlcTable(std::vector<OhlcRow> rows) : rows_(std::move(rows)) {
  std::stable_sort(rows_.begin(), rows_.end(), [](const OhlcRow& a, const OhlcRow& b) { return a.date < b.date; });
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (i > 0 && rows_[i - 1].date == r.date) throw Error(ErrorCode::DuplicateDate, format_iso(r.date));
    if (!(r.open > 0.0) || !(r.close > 0.0))
      throw Error(ErrorCode::BadRow, "row " + format_iso(r.date) + " has a non-positive price");
    if (r.high.has_value() != r.low.has_value())
      throw Error(ErrorCode::BadRow, "row " + format_iso(r.date) + " has only one of high/low");
    if (r.high && (*r.low > std::min(r.open, r.close) || *r.high < std::max(r.open, r.close)))
      throw Error(ErrorCode::BadRow, "row " + format_iso(r.date) + " violates low <= open,close <= high");
  }
}

bool OhlcTable::has_high_low() const noexcept {
  return !rows_.empty() && std::all_of(rows_.begin(), rows_.end(), [](const OhlcRow& r) { return r.high.has_value(); });
}
bool OhlcTable::has_adj_close() const noexcept {
  return !rows_.empty() &&
         std::all_of(rows_.begin(), rows_.end(), [](const OhlcRow& r) { return r.adj_close.has_value(); });
}
bool OhlcTable::has_volume() const noexcept {
  return !rows_.empty() && std::all_of(rows_.begin(), rows_.end(), [](const OhlcRow& r) { return r.volume.has_value(); });
}

ParseResult parse_csv(std::istream& in, const CsvSchema& schema, ParseMode mode) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<ColumnIndex> ci;
  std::size_t width = 0;
  std::vector<OhlcRow> rows;
  std::vector<RowIssue> rejected;

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (lineno == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (trim(view).empty()) continue;
    const auto fields = split_fields(view);
    if (!ci) {
      ci = locate_columns(fields, schema);
      width = fields.size();
      continue;
    }
    auto parsed = parse_row(fields, *ci, width, schema);
    if (auto* reason = std::get_if<std::string>(&parsed)) {
      if (mode == ParseMode::strict)
        throw Error(ErrorCode::BadRow, "line " + std::to_string(lineno) + ": " + *reason);
      rejected.push_back({lineno, std::move(*reason)});
      continue;
    }
    rows.push_back(std::get<OhlcRow>(parsed));
  }
  if (!ci) throw Error(ErrorCode::EmptyFile, "no header row");
  if (rows.empty()) throw Error(ErrorCode::EmptyFile, "no data rows accepted");
  return {OhlcTable(std::move(rows)), std::move(rejected)};
}

ParseResult parse_csv_text(std::string_view text, const CsvSchema& schema, ParseMode mode) {
  std::istringstream is{std::string(text)};
  return parse_csv(is, schema, mode);
}

Series read_column(std::string_view text, const std::string& column, const std::string& date_col) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> value_idx, date_idx;
  std::size_t width = 0;
  std::vector<double> values;
  std::vector<Date> labels;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (lineno == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (trim(view).empty()) continue;
    const auto fields = split_fields(view);
    if (!value_idx) {
      value_idx = find_column(fields, column);
      if (!value_idx) throw Error(ErrorCode::MalformedHeader, "column '" + column + "' not found in header");
      date_idx = find_column(fields, date_col);
      width = fields.size();
      continue;
    }
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (fields.size() != width) throw Error(ErrorCode::BadRow, where + "wrong field count");
    const auto v = parse_number(fields[*value_idx]);
    if (!v) throw Error(ErrorCode::BadRow, where + "unparseable value '" + fields[*value_idx] + "'");
    values.push_back(*v);
    if (date_idx) {
      const auto d = parse_date(fields[*date_idx]);
      if (!d) throw Error(ErrorCode::BadRow, where + "unparseable date '" + fields[*date_idx] + "'");
      labels.push_back(*d);
    }
  }
  if (!value_idx) throw Error(ErrorCode::EmptyFile, "no header row");
  if (values.empty()) throw Error(ErrorCode::EmptyFile, "no data rows");
  if (date_idx) return Series(std::move(values), std::move(labels), column);
  return Series(std::move(values), column);
}

void write_csv(std::ostream& out, const OhlcTable& table) {
  const bool hl = table.has_high_low();
  const bool adj = table.has_adj_close();
  const bool vol = table.has_volume();
  out << "Date,Open";
  if (hl) out << ",High,Low";
  out << ",Close";
  if (adj) out << ",Adj Close";
  if (vol) out << ",Volume";
  out << '\n';
  for (const auto& r : table.rows()) {
    out << format_iso(r.date) << ',' << fmt17(r.open);
    if (hl) out << ',' << fmt17(*r.high) << ',' << fmt17(*r.low);
    out << ',' << fmt17(r.close);
    if (adj) out << ',' << fmt17(*r.adj_close);
    if (vol) out << ',' << fmt17(*r.volume);
    out << '\n';
  }
}

namespace {

Series project(const OhlcTable& t, double OhlcRow::*field, const char* name) {
  if (t.size() == 0) throw Error(ErrorCode::TooShort, "empty table");
  std::vector<double> values;
  std::vector<Date> labels;
  values.reserve(t.size());
  labels.reserve(t.size());
  for (const auto& r : t.rows()) {
    values.push_back(r.*field);
    labels.push_back(r.date);
  }
  return Series(std::move(values), std::move(labels), name);
}

}  // namespace

Series opening(const OhlcTable& t) { return project(t, &OhlcRow::open, "open"); }
Series closing(const OhlcTable& t) { return project(t, &OhlcRow::close, "close"); }

}  // namespace fractalis
