#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fractalis {

using Date = std::chrono::sys_days;

std::string format_iso(Date d);

/// Ordered univariate observations with optional calendar labels.
///
/// Construction enforces the invariants: at least one value, every value
/// finite, and labels (when present) strictly increasing and one per value.
class Series {
public:
  explicit Series(std::vector<double> values, std::string name = {});
  Series(std::vector<double> values, std::vector<Date> labels, std::string name = {});

  std::span<const double> values() const noexcept { return values_; }
  const std::optional<std::vector<Date>>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  Series renamed(std::string name) const;

private:
  std::vector<double> values_;
  std::optional<std::vector<Date>> labels_;
  std::string name_;
};

struct SummaryStats {
  double mean = 0.0;
  double sd = 0.0;  // sample (N-1) convention; 0 when n == 1
  std::array<double, 5> quantiles{};  // at 0, .25, .5, .75, 1
  std::size_t n = 0;
};

/// Linear interpolation between order statistics of an ascending-sorted
/// sample: position p*(n-1), the usual "type 7" convention.
double quantile_sorted(std::span<const double> sorted, double p);

double mean(std::span<const double> xs);
/// Sample standard deviation (divisor N-1). Requires xs.size() >= 2.
double sample_sd(std::span<const double> xs);

/// r[n] = y[n] / y[n-1].
Series returns(const Series& y);
/// R[n] = ln(y[n] / y[n-1]).
Series log_returns(const Series& y);
/// W[n] = y[n] - y[n-1].
Series diff_within(const Series& y);
/// L[n] = x[n] - y[n-1], n = 1..N: next-day open minus previous close.
Series diff_lagged(const Series& x, const Series& y);
/// D[n] = y[n] - x[n]: close minus open of the same day.
Series diff_same_day(const Series& y, const Series& x);
/// (s - mean) / sd using the sample standard deviation.
Series normalize(const Series& s);

SummaryStats summarize(const Series& s);
SummaryStats summarize(std::span<const double> xs);

}  // namespace fractalis
