#include "fractalis/rescaled_range.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "fractalis/error.hpp"

namespace fractalis {

namespace {

// R/S of one block, or a negative value when the block has zero spread.
double block_rs(std::span<const double> block) {
  const double m = static_cast<double>(block.size());
  double e = 0.0;
  for (double x : block) e += x;
  e /= m;
  double ss = 0.0;
  double cum = 0.0, lo = 0.0, hi = 0.0;
  bool first = true;
  for (double x : block) {
    const double dev = x - e;
    ss += dev * dev;
    cum += dev;
    if (first) {
      lo = hi = cum;
      first = false;
    } else {
      lo = std::min(lo, cum);
      hi = std::max(hi, cum);
    }
  }
  const double sd = std::sqrt(ss / m);
  if (!(sd > 0.0)) return -1.0;
  return (hi - lo) / sd;
}

}  // namespace

RsPoint rs_at_scale(const Series& s, std::size_t m, Anchor anchor) {
  const std::size_t n = s.size();
  if (m < 2) throw Error(ErrorCode::ScaleTooLarge, "block length must be at least 2");
  if (m > n)
    throw Error(ErrorCode::ScaleTooLarge,
                "block length " + std::to_string(m) + " exceeds series length " + std::to_string(n));
  RsPoint p;
  p.scale_m = m;
  p.d = n / m;
  const std::size_t offset = anchor == Anchor::front ? 0 : n - p.d * m;
  const auto v = s.values();
  double acc = 0.0;
  std::size_t used = 0;
  for (std::size_t l = 0; l < p.d; ++l) {
    const double rs = block_rs(v.subspan(offset + l * m, m));
    if (rs < 0.0) {
      ++p.skipped;
      continue;
    }
    acc += rs;
    ++used;
  }
  if (used == 0)
    throw Error(ErrorCode::AllBlocksDegenerate, "every block of length " + std::to_string(m) + " is constant");
  p.mean_rs = acc / static_cast<double>(used);
  return p;
}

std::vector<std::size_t> dyadic_scales(std::size_t n, std::size_t min_scale) {
  std::vector<std::size_t> scales;
  for (std::size_t d = 2; n / d >= std::max<std::size_t>(min_scale, 2); d *= 2) scales.push_back(n / d);
  std::reverse(scales.begin(), scales.end());
  return scales;
}

std::vector<std::size_t> log_spaced_scales(std::size_t min_scale, std::size_t max_scale, std::size_t per_octave) {
  std::vector<std::size_t> scales;
  if (min_scale < 2 || max_scale < min_scale || per_octave == 0) return scales;
  const double step = std::pow(2.0, 1.0 / static_cast<double>(per_octave));
  for (double m = static_cast<double>(min_scale); m <= static_cast<double>(max_scale) * (1 + 1e-12); m *= step) {
    const auto k = static_cast<std::size_t>(std::llround(m));
    if (scales.empty() || k > scales.back()) scales.push_back(k);
  }
  if (scales.back() != max_scale && scales.back() < max_scale) scales.push_back(max_scale);
  return scales;
}

LineFit ols(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return f;
}

HurstEstimate hurst(const Series& s, const std::vector<std::size_t>& scales) {
  HurstEstimate est;
  for (std::size_t m : scales) {
    try {
      est.points.push_back(rs_at_scale(s, m));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AllBlocksDegenerate) throw;
      est.warnings.push_back("scale " + std::to_string(m) + " dropped: all blocks constant");
    }
  }
  std::sort(est.points.begin(), est.points.end(),
            [](const RsPoint& a, const RsPoint& b) { return a.scale_m < b.scale_m; });
  est.points.erase(std::unique(est.points.begin(), est.points.end(),
                               [](const RsPoint& a, const RsPoint& b) { return a.scale_m == b.scale_m; }),
                   est.points.end());
  if (est.points.size() < 2)
    throw Error(ErrorCode::InsufficientScales, "need at least two distinct valid scales, have " +
                                                   std::to_string(est.points.size()));
  std::vector<double> lx, ly;
  for (const auto& p : est.points) {
    lx.push_back(std::log(static_cast<double>(p.scale_m)));
    ly.push_back(std::log(p.mean_rs));
  }
  const LineFit f = ols(lx, ly);
  est.H = f.slope;
  est.c = std::exp(f.intercept);
  est.r_squared = f.r_squared;
  return est;
}

std::vector<SweepPoint> hurst_sweep(const Series& s, std::size_t max_scale, std::size_t min_scale) {
  if (max_scale > s.size() / 2)
    throw Error(ErrorCode::ScaleTooLarge, "sweep maximum scale must not exceed N/2");
  const auto scales = log_spaced_scales(min_scale, max_scale);
  // one R/S evaluation per scale, then nested fits
  std::vector<double> lx, ly;
  std::vector<std::size_t> ms;
  for (std::size_t m : scales) {
    try {
      const RsPoint p = rs_at_scale(s, m);
      ms.push_back(m);
      lx.push_back(std::log(static_cast<double>(m)));
      ly.push_back(std::log(p.mean_rs));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AllBlocksDegenerate) throw;
    }
  }
  if (ms.size() < 2) throw Error(ErrorCode::InsufficientScales, "sweep needs at least two valid scales");
  std::vector<SweepPoint> out;
  for (std::size_t k = 2; k <= ms.size(); ++k) {
    const LineFit f = ols(std::span<const double>(lx).first(k), std::span<const double>(ly).first(k));
    out.push_back({ms[k - 1], f.slope});
  }
  return out;
}

}  // namespace fractalis
