#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractalis/series.hpp"

namespace fractalis {

struct OhlcRow {
  Date date;
  double open = 0.0;
  double close = 0.0;
  std::optional<double> high;
  std::optional<double> low;
  std::optional<double> adj_close;
  std::optional<double> volume;

  bool operator==(const OhlcRow&) const = default;
};

/// Daily market records, ascending by date with no duplicates.
class OhlcTable {
public:
  /// Sorts by date and validates every row; throws on duplicate dates or
  /// rows that break the price invariants.
  explicit OhlcTable(std::vector<OhlcRow> rows);

  const std::vector<OhlcRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  bool has_high_low() const noexcept;
  bool has_adj_close() const noexcept;
  bool has_volume() const noexcept;

  bool operator==(const OhlcTable&) const = default;

private:
  std::vector<OhlcRow> rows_;
};

/// Maps column names in the header row to OHLC roles.
struct CsvSchema {
  std::string date = "Date";
  std::string open = "Open";
  std::string high = "High";
  std::string low = "Low";
  std::string close = "Close";
  std::string adj_close = "Adj Close";
  std::string volume = "Volume";
  /// Accepted in addition to ISO-8601; std::get_time syntax, e.g. "%d/%m/%Y".
  std::optional<std::string> alternate_date_format;
};

enum class ParseMode { strict, lenient };

struct RowIssue {
  std::size_t line = 0;  // 1-based line number in the file, header is line 1
  std::string reason;
};

struct ParseResult {
  OhlcTable table;
  std::vector<RowIssue> rejected;  // only populated in lenient mode
};

ParseResult parse_csv(std::istream& in, const CsvSchema& schema = {}, ParseMode mode = ParseMode::strict);
ParseResult parse_csv_text(std::string_view text, const CsvSchema& schema = {},
                           ParseMode mode = ParseMode::strict);

/// Writes the table with the default vendor header; prices at 17
/// significant digits so a re-parse reproduces the values bit for bit.
void write_csv(std::ostream& out, const OhlcTable& table);

std::optional<Date> parse_date(std::string_view text, const std::optional<std::string>& alternate = {});

/// One numeric column of a generic CSV (for instance a simulated series) as
/// a Series. Labels come from `date_col` when the header has it. Every row
/// must parse; there is no lenient mode here.
Series read_column(std::string_view text, const std::string& column, const std::string& date_col = "Date");

Series opening(const OhlcTable& t);
Series closing(const OhlcTable& t);

}  // namespace fractalis
