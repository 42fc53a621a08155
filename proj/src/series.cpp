#include "fractalis/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fractalis/error.hpp"

namespace fractalis {

std::string format_iso(Date d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

namespace {

void check_values(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorCode::TooShort, "series must hold at least one value");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw Error(ErrorCode::NonFiniteValue, "value at index " + std::to_string(i) + " is not finite");
  }
}

void require_length(const Series& s, std::size_t n) {
  if (s.size() < n)
    throw Error(ErrorCode::TooShort, "series '" + s.name() + "' needs at least " + std::to_string(n) +
                                         " values, has " + std::to_string(s.size()));
}

// Labels for an output that drops the first observation.
std::optional<std::vector<Date>> tail_labels(const Series& s) {
  if (!s.labels()) return std::nullopt;
  return std::vector<Date>(s.labels()->begin() + 1, s.labels()->end());
}

Series make(std::vector<double> values, std::optional<std::vector<Date>> labels, std::string name) {
  if (labels) return Series(std::move(values), std::move(*labels), std::move(name));
  return Series(std::move(values), std::move(name));
}

void require_aligned(const Series& a, const Series& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::LengthMismatch, "series lengths differ: " + std::to_string(a.size()) + " vs " +
                                               std::to_string(b.size()));
  if (a.labels() && b.labels() && *a.labels() != *b.labels())
    throw Error(ErrorCode::LengthMismatch, "series date labels are not aligned");
}

const std::optional<std::vector<Date>>& either_labels(const Series& a, const Series& b) {
  return a.labels() ? a.labels() : b.labels();
}

}  // namespace

Series::Series(std::vector<double> values, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {
  check_values(values_);
}

Series::Series(std::vector<double> values, std::vector<Date> labels, std::string name)
    : values_(std::move(values)), labels_(std::move(labels)), name_(std::move(name)) {
  check_values(values_);
  if (labels_->size() != values_.size())
    throw Error(ErrorCode::LengthMismatch, "label count differs from value count");
  for (std::size_t i = 1; i < labels_->size(); ++i) {
    if ((*labels_)[i] <= (*labels_)[i - 1])
      throw Error(ErrorCode::LabelOrder, "labels not strictly increasing at index " + std::to_string(i));
  }
}

Series Series::renamed(std::string name) const {
  Series out = *this;
  out.name_ = std::move(name);
  return out;
}

double quantile_sorted(std::span<const double> sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = p * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double mean(std::span<const double> xs) {
  double m = 0.0;
  std::size_t k = 0;
  for (double x : xs) m += (x - m) / static_cast<double>(++k);
  return m;
}

double sample_sd(std::span<const double> xs) {
  if (xs.size() < 2) throw Error(ErrorCode::TooShort, "standard deviation needs two values");
  // Welford
  double m = 0.0, m2 = 0.0;
  std::size_t k = 0;
  for (double x : xs) {
    ++k;
    const double d = x - m;
    m += d / static_cast<double>(k);
    m2 += d * (x - m);
  }
  return std::sqrt(m2 / static_cast<double>(xs.size() - 1));
}

Series returns(const Series& y) {
  require_length(y, 2);
  const auto v = y.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0.0)
      throw Error(ErrorCode::NonPositiveValue, "value at index " + std::to_string(i) + " is not positive");
  }
  std::vector<double> out(v.size() - 1);
  for (std::size_t n = 1; n < v.size(); ++n) out[n - 1] = v[n] / v[n - 1];
  return make(std::move(out), tail_labels(y), "returns(" + y.name() + ")");
}

Series log_returns(const Series& y) {
  const Series r = returns(y);
  std::vector<double> out(r.values().begin(), r.values().end());
  for (double& x : out) x = std::log(x);
  return make(std::move(out), r.labels(), "log_returns(" + y.name() + ")");
}

Series diff_within(const Series& y) {
  require_length(y, 2);
  const auto v = y.values();
  std::vector<double> out(v.size() - 1);
  for (std::size_t n = 1; n < v.size(); ++n) out[n - 1] = v[n] - v[n - 1];
  return make(std::move(out), tail_labels(y), "W(" + y.name() + ")");
}

Series diff_lagged(const Series& x, const Series& y) {
  require_aligned(x, y);
  require_length(x, 2);
  const auto xv = x.values();
  const auto yv = y.values();
  std::vector<double> out(xv.size() - 1);
  for (std::size_t n = 1; n < xv.size(); ++n) out[n - 1] = xv[n] - yv[n - 1];
  const auto& labels = either_labels(x, y);
  std::optional<std::vector<Date>> tl;
  if (labels) tl.emplace(labels->begin() + 1, labels->end());
  return make(std::move(out), std::move(tl), "L(" + x.name() + "," + y.name() + ")");
}

Series diff_same_day(const Series& y, const Series& x) {
  require_aligned(y, x);
  const auto yv = y.values();
  const auto xv = x.values();
  std::vector<double> out(yv.size());
  for (std::size_t n = 0; n < yv.size(); ++n) out[n] = yv[n] - xv[n];
  return make(std::move(out), either_labels(y, x), "D(" + y.name() + "," + x.name() + ")");
}

Series normalize(const Series& s) {
  const auto v = s.values();
  if (v.size() < 2) throw Error(ErrorCode::ZeroVariance, "a single value has no spread");
  const double m = mean(v);
  const double sd = sample_sd(v);
  if (!(sd > 0.0)) throw Error(ErrorCode::ZeroVariance, "series '" + s.name() + "' is constant");
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - m) / sd;
  return make(std::move(out), s.labels(), "normalized(" + s.name() + ")");
}

SummaryStats summarize(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::TooShort, "cannot summarize an empty sample");
  SummaryStats st;
  st.n = xs.size();
  st.mean = mean(xs);
  st.sd = xs.size() > 1 ? sample_sd(xs) : 0.0;
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  constexpr std::array<double, 5> probs{0.0, 0.25, 0.5, 0.75, 1.0};
  for (std::size_t i = 0; i < probs.size(); ++i) st.quantiles[i] = quantile_sorted(sorted, probs[i]);
  return st;
}

SummaryStats summarize(const Series& s) { return summarize(s.values()); }

}  // namespace fractalis
