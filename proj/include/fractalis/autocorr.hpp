#pragma once

#include <vector>

#include "fractalis/series.hpp"

namespace fractalis {

struct AcfResult {
  std::vector<double> rho;  // rho[h] for h = 0..h_max
  double gamma0 = 0.0;
  std::size_t n = 0;

  std::size_t max_lag() const noexcept { return rho.empty() ? 0 : rho.size() - 1; }
  /// Two-sided 95% white-noise band, 1.96 / sqrt(n).
  double white_noise_band() const;
};

/// Biased estimator: gamma(h) = 1/N * sum_{t=1}^{N-h} (s[t+h] - mean)(s[t] - mean),
/// with the full-sample mean.
std::vector<double> autocovariance(const Series& s, std::size_t h_max);

/// rho(h) = gamma(h) / gamma(0).
AcfResult autocorrelation(const Series& s, std::size_t h_max);

/// Mean and spread of rho over lags 1..h_max.
SummaryStats acf_summary(const AcfResult& a);

}  // namespace fractalis
