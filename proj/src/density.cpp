#include "fractalis/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fractalis/error.hpp"
#include "fractalis/parallel.hpp"

namespace fractalis {

std::string_view to_string(Kernel k) {
  switch (k) {
    case Kernel::gaussian: return "gaussian";
    case Kernel::epanechnikov: return "epanechnikov";
  }
  return "unknown";
}

Kernel kernel_from_string(std::string_view name) {
  if (name == "gaussian") return Kernel::gaussian;
  if (name == "epanechnikov") return Kernel::epanechnikov;
  throw Error(ErrorCode::InvalidParams, "unknown kernel '" + std::string(name) + "'");
}

double kernel_value(Kernel k, double u) {
  switch (k) {
    case Kernel::gaussian:
      return std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
    case Kernel::epanechnikov:
      return std::abs(u) < 1.0 ? 0.75 * (1.0 - u * u) : 0.0;
  }
  return 0.0;
}

KdeResult kde(const Series& sample, std::span<const double> grid, double h, Kernel kernel) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::BadBandwidth, "bandwidth must be positive");
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "no evaluation points");
  if (sample.size() < 2) throw Error(ErrorCode::TooShort, "kde needs at least two observations");
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (!(grid[j] > grid[j - 1])) throw Error(ErrorCode::EmptyGrid, "grid must be strictly increasing");
  }

  KdeResult out;
  out.grid.assign(grid.begin(), grid.end());
  out.density.resize(grid.size());
  out.bandwidth = h;
  out.kernel = kernel;
  out.n = sample.size();

  const auto xs = sample.values();
  const double scale = 1.0 / (static_cast<double>(xs.size()) * h);
  parallel_for(grid.size(), [&](std::size_t j) {
    double acc = 0.0;
    for (double x : xs) acc += kernel_value(kernel, (grid[j] - x) / h);
    out.density[j] = acc * scale;
  });
  return out;
}

std::vector<double> default_grid(const Series& sample, double h, std::size_t points) {
  if (points < 2) throw Error(ErrorCode::EmptyGrid, "grid needs at least two points");
  const auto [lo_it, hi_it] = std::minmax_element(sample.values().begin(), sample.values().end());
  const double lo = *lo_it - 4.0 * h;
  const double hi = *hi_it + 4.0 * h;
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t j = 0; j < points; ++j) grid[j] = lo + step * static_cast<double>(j);
  grid.back() = hi;
  return grid;
}

double bandwidth_silverman(const Series& sample) {
  if (sample.size() < 2) throw Error(ErrorCode::TooShort, "bandwidth needs at least two observations");
  const double sd = sample_sd(sample.values());
  if (!(sd > 0.0)) throw Error(ErrorCode::ZeroVariance, "sample is constant");
  std::vector<double> sorted(sample.values().begin(), sample.values().end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  // IQR can vanish on heavily tied data; fall back to sd alone then
  const double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  return 0.9 * spread * std::pow(static_cast<double>(sample.size()), -0.2);
}

Series kde_difference(const KdeResult& a, const KdeResult& b) {
  if (a.grid != b.grid || a.bandwidth != b.bandwidth)
    throw Error(ErrorCode::GridMismatch, "density estimates use different grids or bandwidths");
  std::vector<double> diff(a.density.size());
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = a.density[j] - b.density[j];
  return Series(std::move(diff), "kde_difference");
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "trapezoid abscissae and ordinates differ");
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return s;
}

}  // namespace fractalis
