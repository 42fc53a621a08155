#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fractalis/series.hpp"

namespace fractalis {

enum class Kernel { gaussian, epanechnikov };

std::string_view to_string(Kernel k);
Kernel kernel_from_string(std::string_view name);

/// Normalized kernel K(u).
double kernel_value(Kernel k, double u);

struct KdeResult {
  std::vector<double> grid;
  std::vector<double> density;
  double bandwidth = 0.0;
  Kernel kernel = Kernel::gaussian;
  std::size_t n = 0;
};

/// P(x) = 1/(n h) * sum_i K((x - X_i) / h), evaluated directly at every
/// grid point.
KdeResult kde(const Series& sample, std::span<const double> grid, double h, Kernel kernel = Kernel::gaussian);

/// `points` equally spaced abscissae over [min - 4h, max + 4h].
std::vector<double> default_grid(const Series& sample, double h, std::size_t points = 512);

/// Rule-of-thumb h = 0.9 * min(sd, IQR / 1.34) * n^(-1/5).
double bandwidth_silverman(const Series& sample);

/// a.density - b.density; both results must share grid and bandwidth.
Series kde_difference(const KdeResult& a, const KdeResult& b);

double trapezoid(std::span<const double> x, std::span<const double> y);

}  // namespace fractalis
