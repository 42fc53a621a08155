#pragma once

#include <cstdint>

#include "fractalis/series.hpp"
#include "fractalis/stable.hpp"

namespace fractalis {

/// n i.i.d. standard normal variates.
Series white_noise(std::size_t n, std::uint64_t seed);

/// Markovian walk over returns: r[0] = start, r[t+1] = r[t] + xi[t] with xi
/// drawn from the stable noise law.
struct WalkSpec {
  double start = 1.0;
  std::size_t steps = 1;
  StableParams noise;
  std::uint64_t seed = 0;
};

/// The steps + 1 walk values, r[0] through r[steps].
Series stable_walk(const WalkSpec& spec);

/// Price path p[0] = start_price, p[n] = p[n-1] * r[n] for n >= 1. Throws
/// NonPositiveValue if any return is not positive.
Series prices_from_returns(const Series& r, double start_price);

}  // namespace fractalis
