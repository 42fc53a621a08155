#pragma once

#include <string>
#include <vector>

#include "fractalis/series.hpp"

namespace fractalis {

/// Mean rescaled range at one block length.
struct RsPoint {
  std::size_t scale_m = 0;     // block length m
  std::size_t d = 0;           // number of blocks, floor(N / m)
  double mean_rs = 0.0;        // average of R/S over non-degenerate blocks
  std::size_t skipped = 0;     // blocks with zero spread, left out of the mean
};

struct HurstEstimate {
  double H = 0.0;          // OLS slope of log <R/S> on log m
  double c = 0.0;          // exp(intercept)
  double r_squared = 0.0;
  std::vector<RsPoint> points;
  std::vector<std::string> warnings;  // scales dropped because every block was flat
};

/// Which end of the series the blocks are aligned to; the leftover tail
/// (N mod m observations) is dropped from the other end.
enum class Anchor { front, back };

/// Splits the series into d = floor(N/m) consecutive blocks of length m and
/// averages R/S over them. Inside a block: deviations from the block mean,
/// partial sums Y_1..Y_m, R = max(Y) - min(Y), S the population standard
/// deviation.
RsPoint rs_at_scale(const Series& s, std::size_t m, Anchor anchor = Anchor::front);

/// Dyadic block lengths N/2^k (k >= 1) that are at least `min_scale`,
/// ascending.
std::vector<std::size_t> dyadic_scales(std::size_t n, std::size_t min_scale = 8);

/// Roughly geometric block lengths from min_scale to max_scale with
/// `per_octave` points per doubling, de-duplicated and ascending.
std::vector<std::size_t> log_spaced_scales(std::size_t min_scale, std::size_t max_scale, std::size_t per_octave = 4);

/// Fits log <R/S> = log c + H log m by ordinary least squares.
HurstEstimate hurst(const Series& s, const std::vector<std::size_t>& scales);

struct SweepPoint {
  std::size_t cutoff = 0;  // largest block length in the fit
  double H = 0.0;
};

/// Re-fits H with scales restricted to m <= cutoff for each cutoff in the
/// log-spaced scale set between min_scale and max_scale.
std::vector<SweepPoint> hurst_sweep(const Series& s, std::size_t max_scale, std::size_t min_scale = 8);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit ols(std::span<const double> x, std::span<const double> y);

}  // namespace fractalis
