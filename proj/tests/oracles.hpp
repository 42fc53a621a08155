#pragma once

// Independent reference implementations used only by the test suites.
// Each one follows the textbook definition as directly as possible and
// shares no code path with the library routine it checks.

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

inline double two_pass_mean(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double two_pass_sd(const std::vector<double>& x) {
  const double m = two_pass_mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

/// Autocovariance by the O(N^2) double sum over all index pairs at lag h.
inline std::vector<double> autocovariance(const std::vector<double>& x, std::size_t h_max) {
  const std::size_t n = x.size();
  const double m = two_pass_mean(x);
  std::vector<double> g(h_max + 1, 0.0);
  for (std::size_t h = 0; h <= h_max; ++h) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j == i + h) s += (x[j] - m) * (x[i] - m);
    g[h] = s / static_cast<double>(n);
  }
  return g;
}

/// Mean R/S with explicit arrays: block copies, a cumulative-sum vector,
/// population sd from the two-pass formula.
inline double mean_rs(const std::vector<double>& x, std::size_t m) {
  const std::size_t d = x.size() / m;
  double total = 0.0;
  std::size_t used = 0;
  for (std::size_t l = 0; l < d; ++l) {
    std::vector<double> block(x.begin() + static_cast<long>(l * m), x.begin() + static_cast<long>((l + 1) * m));
    double e = 0.0;
    for (double v : block) e += v;
    e /= static_cast<double>(m);
    std::vector<double> cum(m);
    double run = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      run += block[j] - e;
      cum[j] = run;
    }
    double var = 0.0;
    for (double v : block) var += (v - e) * (v - e);
    const double s = std::sqrt(var / static_cast<double>(m));
    if (s == 0.0) continue;
    const auto [lo, hi] = std::minmax_element(cum.begin(), cum.end());
    total += (*hi - *lo) / s;
    ++used;
  }
  return total / static_cast<double>(used);
}

/// Standardized S0 stable density by direct Fourier inversion of the
/// characteristic function:
///   f(z) = 1/pi * int_0^inf exp(-t^a) cos(t z + b tan(pi a/2) (t - t^a)) dt   (a != 1)
///   f(z) = 1/pi * int_0^inf exp(-t)   cos(t z + b (2/pi) t ln t) dt           (a == 1)
inline double stable_pdf_fourier(double a, double b, double z) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double pi = std::numbers::pi;
  auto integrand = [&](double t) {
    if (t == 0.0) return 1.0;
    double phase;
    if (a == 1.0)
      phase = t * z + b * (2.0 / pi) * t * std::log(t);
    else
      phase = t * z + b * std::tan(pi * a / 2.0) * (t - std::pow(t, a));
    return std::exp(-std::pow(t, a)) * std::cos(phase);
  };
  const double upper = std::pow(60.0, 1.0 / a);
  const double freq = std::abs(z) + std::abs(a == 1.0 ? b : b * std::tan(pi * a / 2.0)) + 1.0;
  const double width = std::min(0.5, pi / freq);
  double total = 0.0;
  double lo = 0.0;
  // resolve the t^a cusp at the origin on a geometric sub-grid
  for (double edge = 1e-12; edge < width; edge *= 10.0) {
    total += GK::integrate(integrand, lo, edge, 10, 1e-13);
    lo = edge;
  }
  for (; lo < upper; lo += width) total += GK::integrate(integrand, lo, std::min(upper, lo + width), 8, 1e-13);
  return total / pi;
}

inline double levy_pdf(double gamma, double location, double x) {
  if (x <= location) return 0.0;
  const double u = x - location;
  return std::sqrt(gamma / (2.0 * std::numbers::pi)) * std::pow(u, -1.5) * std::exp(-gamma / (2.0 * u));
}

}  // namespace oracle
