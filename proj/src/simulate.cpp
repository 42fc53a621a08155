#include "fractalis/simulate.hpp"

#include <string>
#include <vector>

#include "fractalis/error.hpp"
#include "fractalis/random.hpp"

namespace fractalis {

Series white_noise(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::TooShort, "white noise length must be at least 1");
  Rng rng(seed);
  std::vector<double> z(n);
  for (auto& v : z) v = rng.normal();
  return Series(std::move(z), "white_noise");
}

Series stable_walk(const WalkSpec& spec) {
  if (spec.steps == 0) throw Error(ErrorCode::TooShort, "walk needs at least one step");
  const Series xi = sample_stable(spec.noise, spec.steps, spec.seed);
  std::vector<double> r(spec.steps + 1);
  r[0] = spec.start;
  for (std::size_t t = 0; t < spec.steps; ++t) r[t + 1] = r[t] + xi[t];
  return Series(std::move(r), "stable_walk");
}

Series prices_from_returns(const Series& r, double start_price) {
  if (!(start_price > 0.0)) throw Error(ErrorCode::NonPositiveValue, "start price must be positive");
  std::vector<double> p(r.size() + 1);
  p[0] = start_price;
  for (std::size_t n = 0; n < r.size(); ++n) {
    if (!(r[n] > 0.0))
      throw Error(ErrorCode::NonPositiveValue, "return at index " + std::to_string(n) + " is not positive");
    p[n + 1] = p[n] * r[n];
  }
  return Series(std::move(p), "prices");
}

}  // namespace fractalis
